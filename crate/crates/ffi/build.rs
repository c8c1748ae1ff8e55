//! Generates the C header with cbindgen into OUT_DIR, then refreshes the
//! committed copy at include/congruence.h only when the content changed,
//! so clean builds never dirty the tree.

use std::env;
use std::fs;
use std::path::PathBuf;

fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");

    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").expect("manifest dir"));
    let out_path = PathBuf::from(env::var("OUT_DIR").expect("out dir")).join("congruence.h");

    let config = cbindgen::Config::from_file(crate_dir.join("cbindgen.toml"))
        .expect("cbindgen.toml parses");
    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("C header generation")
        .write_to_file(&out_path);

    let committed = crate_dir.join("include").join("congruence.h");
    let generated = fs::read(&out_path).expect("generated header readable");
    let stale = match fs::read(&committed) {
        Ok(existing) => existing != generated,
        Err(_) => true,
    };
    if stale {
        fs::create_dir_all(committed.parent().expect("include dir")).expect("mkdir include");
        fs::write(&committed, &generated).expect("write committed header");
    }
}
