//! Compiles and runs a C program against the generated header and the
//! static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "endoaip.h"

int main(void) {
    EndoaipModule *m = NULL;
    const char *z4 = "{\"ring\": {\"kind\": \"cyclic\", \"n\": 4}, \"kind\": \"z_module\", \"orders\": [4]}";
    if (endoaip_module_from_json(z4, NULL, &m) != ENDOAIP_STATUS_OK) return 10;
    if (endoaip_module_order(m) != 4) return 11;
    bool holds = true;
    char *verdict = NULL;
    if (endoaip_module_check(m, "endo_aip", NULL, &holds, &verdict) != ENDOAIP_STATUS_OK) return 12;
    if (holds || strstr(verdict, "\"holds\":false") == NULL) return 13;
    bool valid = false;
    if (endoaip_module_replay(m, verdict, NULL, &valid) != ENDOAIP_STATUS_OK || !valid) return 14;
    endoaip_string_free(verdict);
    if (endoaip_module_check(m, "bogus", NULL, NULL, NULL) != ENDOAIP_STATUS_UNKNOWN_PROPERTY) return 15;
    if (strlen(endoaip_last_error()) == 0) return 16;
    endoaip_module_free(m);
    printf("ok\n");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary> -> target/<profile>
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libendoaip_ffi.a");
    // Cargo builds every crate type of the library before its tests.
    assert!(lib.exists(), "missing {}", lib.display());

    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let exe = dir.path().join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let out = Command::new(cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
