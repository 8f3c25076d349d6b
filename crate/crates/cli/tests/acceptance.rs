//! Acceptance criterion 11: the bundled demo completes successfully and
//! quickly.

use std::process::Command;
use std::time::Instant;

#[test]
fn criterion_11_demo_sl2() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_opsplit"))
        .args(["demo", "sl2"])
        .output()
        .expect("spawn opsplit");
    let elapsed = start.elapsed().as_secs_f64();
    let ok = out.status.code() == Some(0) && elapsed < 5.0;
    println!(
        "criterion 11 (demo sl2 exits 0 in under 5 s): {}",
        if ok { "pass" } else { "fail" }
    );
    assert!(
        ok,
        "exit {:?} in {elapsed:.2} s; stdout:\n{}",
        out.status.code(),
        String::from_utf8_lossy(&out.stdout)
    );
}
