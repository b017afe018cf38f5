//! Compiles a small C program against the generated header and the static
//! library. Skipped when no C compiler is on the path.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include "strongcolor.h"

int main(void) {
    ScGraph *g = NULL;
    ScColoring *c = NULL;
    bool valid = false;
    int chi = 0;
    if (sc_graph_named("dodecahedron", &g) != SC_STATUS_OK) return 10;
    if (sc_color(g, &c) != SC_STATUS_OK) { fprintf(stderr, "%s\n", sc_last_error()); return 11; }
    if (sc_verify(g, c, &valid) != SC_STATUS_OK || !valid) return 12;
    if (sc_coloring_max_color(c) > 9) return 13;
    sc_coloring_free(c);
    sc_graph_free(g);
    if (sc_graph_named("c5", &g) != SC_STATUS_OK) return 14;
    if (sc_exact(g, 9, false, &chi) != SC_STATUS_OK || chi != 5) return 15;
    sc_graph_free(g);
    if (sc_graph_parse("0 0", &g) != SC_STATUS_INVALID_INPUT) return 16;
    printf("ok\n");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libstrongcolor_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let bin = dir.path().join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(
        out.status.success(),
        "C program exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
