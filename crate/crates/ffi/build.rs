fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").unwrap();
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    match cbindgen::generate(&crate_dir) {
        Ok(bindings) => {
            bindings.write_to_file("include/detcon.h");
        }
        // cargo reports syntax errors itself
        Err(cbindgen::Error::ParseSyntaxError { .. }) => {}
        Err(err) => panic!("failed to generate C header: {err:?}"),
    }
}
