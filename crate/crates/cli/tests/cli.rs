use std::process::Command;

use clap::Parser;
use dnc_cli::{run, CliConfig, EXIT_OK, EXIT_USAGE};
use dnc_core::arith::BigNat;

fn dnc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dnc")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_args(args: &[&str]) -> dnc_cli::Outcome {
    let argv = std::iter::once("dnc").chain(args.iter().copied());
    run(&CliConfig::try_parse_from(argv).unwrap())
}

#[test]
fn documented_invocations() {
    assert_eq!(dnc(&["solve", "--a", "1", "--poly", "1,0:1;0,1:1", "--x1", "0", "--n", "7"]).1, "20\n");
    assert_eq!(
        dnc(&["solve", "--a", "2", "--poly", "0,1:1;1,0:-1", "--x1", "1", "--n", "1000000007"]).1,
        "1000000014000000049\n"
    );
    assert_eq!(dnc(&["catalog", "--name", "sackin", "--n", "1"]).1, "0\n");
}

#[test]
fn huge_index() {
    let n = (BigNat::from(1u8) << 128u32) + 1u8;
    let out = run_args(&["solve", "--a", "2", "--poly", "0,1:1;1,0:-1", "--x1", "1", "--n", &n.to_string()]);
    assert_eq!(out.stdout.trim(), (&n * &n).to_string());
}

#[test]
fn usage_errors_name_the_token() {
    let cases: [(&[&str], &str); 4] = [
        (&["solve", "--a", "1/0", "--poly", "1,0:1", "--n", "3"], "`1/0`"),
        (&["solve", "--a", "1", "--poly", "1,0:1;x,2:3", "--n", "3"], "`x,2:3`"),
        (&["solve", "--a", "1", "--poly", "1,0:1", "--n", "-4"], "`-4`"),
        (&["sequence", "--a", "1", "--poly", "1,0:1", "--x1", "1/", "--to", "3"], "`1/`"),
    ];
    for (args, token) in cases {
        let (code, stdout, stderr) = dnc(args);
        assert_eq!(code, EXIT_USAGE as i32, "{args:?}");
        assert!(stdout.is_empty());
        assert!(stderr.contains(token), "{stderr}");
    }
    assert_eq!(dnc(&["solve", "--a", "0", "--poly", "1,0:1", "--n", "3"]).0, EXIT_USAGE as i32);
    assert_eq!(dnc(&["solve", "--a", "1", "--poly", "1,0:1", "--n", "0"]).0, EXIT_USAGE as i32);
    assert_eq!(dnc(&["solve", "--a", "1"]).0, EXIT_USAGE as i32);
    assert_eq!(dnc(&["frobnicate"]).0, EXIT_USAGE as i32);
}

#[test]
fn unknown_catalog_name_lists_entries() {
    let (code, _, stderr) = dnc(&["catalog", "--name", "sakin", "--n", "3"]);
    assert_eq!(code, EXIT_USAGE as i32);
    for name in dnc_core::catalog::names() {
        assert!(stderr.contains(name), "{stderr}");
    }
}

#[test]
fn sequence_formats() {
    let base = ["sequence", "--a", "1/2", "--poly", "1,0:1/2;0,1:-1/2", "--x1", "1", "--to", "4"];
    let with = |f: &str| {
        let mut v = base.to_vec();
        v.extend(["--format", f]);
        run_args(&v).stdout
    };
    assert_eq!(with("plain"), "1\n1\n3/2\n1\n");
    assert_eq!(with("csv"), "n,value\n1,1\n2,1\n3,3/2\n4,1\n");
    let json: serde_json::Value = serde_json::from_str(&with("json")).unwrap();
    assert_eq!(json[2], serde_json::json!({ "n": "3", "value": "3/2" }));
    assert_eq!(json.as_array().unwrap().len(), 4);
}

#[test]
fn catalog_ranges_and_offsets() {
    let out = run_args(&["catalog", "--name", "sackin", "--to", "5"]).stdout;
    assert_eq!(out, "0\n2\n5\n8\n12\n");
    // shifted entries start at index 0 in OEIS numbering
    let plain = run_args(&["catalog", "--name", "a005536", "--to", "6"]).stdout;
    let oeis = run_args(&["catalog", "--name", "a005536", "--to", "5", "--oeis", "--format", "csv"]).stdout;
    let values: Vec<&str> = oeis.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(values, plain.lines().collect::<Vec<_>>());
    assert!(oeis.lines().nth(1).unwrap().starts_with("0,"));
}

#[test]
fn list_every_entry() {
    let plain = run_args(&["list"]).stdout;
    assert_eq!(plain.lines().count(), dnc_core::catalog::ENTRIES.len());
    let json: serde_json::Value = serde_json::from_str(&run_args(&["list", "--format", "json"]).stdout).unwrap();
    assert_eq!(json[0]["name"], "sackin");
    assert_eq!(json[0]["oeis"], "A003314");
    let csv = run_args(&["list", "--format", "csv"]).stdout;
    assert!(csv.lines().nth(1).unwrap().starts_with("sackin,A003314,1,\"1,0:1;0,1:1\",0,0,"));
}

#[test]
fn verify_single_recurrence() {
    let out = run_args(&["verify", "--a", "-2", "--poly", "2,1:3;0,0:-1", "--x1", "5", "--to", "300"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("PASS"));
    assert_eq!(run_args(&["verify", "--a", "2", "--to", "3"]).code, EXIT_USAGE);
}

#[test]
fn recurrence_check_is_deterministic() {
    let args = ["recurrence-check", "--a", "2/3", "--poly", "1,1:1;0,2:-3", "--x1", "1", "--bits", "96", "--count", "20", "--seed", "7"];
    let first = dnc(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first.1, "PASS: 20 samples of 96 bits (seed 7)\n");
    assert_eq!(dnc(&args), first);
    assert_eq!(dnc(&["recurrence-check", "--a", "1", "--poly", "", "--bits", "1"]).0, EXIT_USAGE as i32);
}

#[test]
fn random_bits_have_exact_length() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    for bits in [2u64, 7, 8, 9, 128, 256] {
        for _ in 0..20 {
            assert_eq!(dnc_cli::random_bits(&mut rng, bits).bits(), bits);
        }
    }
}

#[test]
fn same_config_same_output() {
    let args = ["sequence", "--a", "-1", "--poly", "1,1:1", "--to", "64", "--format", "json"];
    assert_eq!(dnc(&args), dnc(&args));
}
