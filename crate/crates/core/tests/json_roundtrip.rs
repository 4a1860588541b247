use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lenslk::exact::gcd;
use lenslk::report::{run_batch, to_json, OutputFormat, ReportJson};
use lenslk::{classify, KnotClass, LensSpace};

#[test]
fn reports_round_trip_byte_identically() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut n = 0;
    while n < 3000 {
        let p = rng.gen_range(2..=90i64);
        let q = rng.gen_range(1..p);
        let (a, b) = (rng.gen_range(-200..=200i64), rng.gen_range(-200..=200i64));
        if gcd(p, q) != 1 || gcd(a, b) != 1 {
            continue;
        }
        let r = classify(&LensSpace::new(p, q).unwrap(), &KnotClass::new(a, b).unwrap()).unwrap();
        let text = to_json(&r);
        let back: ReportJson = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
        n += 1;
    }
}

#[test]
fn top_level_keys_in_canonical_order() {
    let r = classify(&LensSpace::new(8, 5).unwrap(), &KnotClass::new(-3, 7).unwrap()).unwrap();
    let text = to_json(&r);
    let keys = ["\"space\"", "\"knot\"", "\"tw_max\"", "\"tb_max\"", "\"rot_peaks\"", "\"witness_slopes\"", "\"notes\""];
    let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{text}");
    assert!(!text.contains('.'), "no floats on the wire: {text}");
}

#[test]
fn batch_lines_round_trip() {
    let out = run_batch("8 5 -3 7 45/8 -7/4\n7 2 -9 4\n5 2 0 1\n", 1, OutputFormat::Json);
    assert!(out.failures.is_empty());
    for line in &out.lines {
        let back: ReportJson = serde_json::from_str(line).unwrap();
        assert_eq!(&serde_json::to_string(&back).unwrap(), line);
    }
}
