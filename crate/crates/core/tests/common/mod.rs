#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: Option<&'static str>,
    pub exit: i32,
    /// Required prefix of stderr, for error paths.
    pub stderr_prefix: Option<&'static str>,
}

const fn ok(name: &'static str, args: &'static [&'static str]) -> Case {
    Case {
        name,
        args,
        stdin: None,
        exit: 0,
        stderr_prefix: None,
    }
}

const fn domain(name: &'static str, args: &'static [&'static str], kind: &'static str) -> Case {
    Case {
        name,
        args,
        stdin: None,
        exit: 1,
        stderr_prefix: Some(kind),
    }
}

const fn usage(name: &'static str, args: &'static [&'static str]) -> Case {
    Case {
        name,
        args,
        stdin: None,
        exit: 2,
        stderr_prefix: Some("error:"),
    }
}

/// Every documented invocation; expected stdout lives in `tests/golden/<name>.stdout`.
pub const CASES: &[Case] = &[
    ok("encode_7", &["encode", "7", "--terms", "3"]),
    ok("encode_zero_r3", &["encode", "0", "--terms", "3"]),
    ok("encode_zero_r5", &["encode", "0", "--terms", "5"]),
    ok("encode_zero_r1", &["encode", "0", "--terms", "1"]),
    ok("encode_million_r4", &["encode", "1000000", "--terms", "4"]),
    domain(
        "encode_zero_terms",
        &["encode", "5", "--terms", "0"],
        "ERROR ZeroDegree: ",
    ),
    ok("decode_zero", &["decode", "2,1,0"]),
    ok("decode_7", &["decode", "4,3,0"]),
    ok("decode_10", &["decode", "5,1,0"]),
    domain(
        "decode_equal_pair",
        &["decode", "3,3,0"],
        "ERROR NotStrictlyDecreasing: ",
    ),
    domain(
        "decode_empty",
        &["decode", ""],
        "ERROR EmptyRepresentation: ",
    ),
    Case {
        name: "decode_stdin",
        args: &["decode"],
        stdin: Some("4,3,0\n5,1,0\n2,1,0\n"),
        exit: 0,
        stderr_prefix: None,
    },
    ok("succ_zero", &["succ", "2,1,0"]),
    ok("succ_bump", &["succ", "4,3,0"]),
    ok("succ_full_run", &["succ", "4,3,2"]),
    ok("pred_3_1_0", &["pred", "3,1,0"]),
    ok("pred_4_3_1", &["pred", "4,3,1"]),
    domain("pred_zero", &["pred", "2,1,0"], "ERROR PredecessorOfZero: "),
    ok("rank_zero", &["rank", "0,1,2"]),
    ok("rank_1_2_3", &["rank", "1,2,3"]),
    ok("rank_2_3", &["rank", "2,3"]),
    domain(
        "rank_unsorted",
        &["rank", "3,2"],
        "ERROR NotStrictlyIncreasing: ",
    ),
    ok("unrank_zero", &["unrank", "0", "-k", "3"]),
    ok("unrank_7", &["unrank", "7", "-k", "3"]),
    ok("unrank_5_k2", &["unrank", "5", "-k", "2"]),
    ok(
        "enumerate_pairs",
        &["enumerate", "-k", "2", "--start", "0", "--count", "4"],
    ),
    ok("enumerate_default_k3", &["enumerate", "-k", "3"]),
    ok(
        "enumerate_r1",
        &["enumerate", "-k", "1", "--start", "5", "--count", "2"],
    ),
    ok(
        "enumerate_rank9",
        &["enumerate", "-k", "3", "--start", "9", "--count", "1"],
    ),
    ok("bits_00111", &["bits", "0,1,2", "-n", "5"]),
    ok("bits_1100", &["bits", "2,3", "-n", "4"]),
    domain(
        "bits_out_of_universe",
        &["bits", "4", "-n", "3"],
        "ERROR ElementOutOfUniverse: ",
    ),
    ok("unbits_00111", &["unbits", "00111"]),
    ok("unbits_1100", &["unbits", "1100"]),
    domain(
        "unbits_empty",
        &["unbits", "0000"],
        "ERROR EmptyCombination: ",
    ),
    domain(
        "unbits_malformed",
        &["unbits", "0120"],
        "ERROR MalformedBitstring: ",
    ),
    ok(
        "split_even",
        &[
            "split", "-k", "3", "--start", "0", "--end", "10", "--parts", "2",
        ],
    ),
    ok(
        "split_remainder",
        &[
            "split", "-k", "3", "--start", "0", "--end", "10", "--parts", "3",
        ],
    ),
    ok(
        "split_empty",
        &[
            "split", "-k", "2", "--start", "5", "--end", "5", "--parts", "4",
        ],
    ),
    domain(
        "split_inverted",
        &[
            "split", "-k", "2", "--start", "6", "--end", "5", "--parts", "1",
        ],
        "ERROR InvalidRange: ",
    ),
    ok(
        "verify_r3_b20",
        &["verify", "--terms", "3", "--bound", "20"],
    ),
    ok("verify_r3_b3", &["verify", "--terms", "3", "--bound", "3"]),
    ok("verify_r2_b4", &["verify", "--terms", "2", "--bound", "4"]),
    domain(
        "verify_bound_below",
        &["verify", "--terms", "4", "--bound", "3"],
        "ERROR BoundBelowDegree: ",
    ),
    ok(
        "identities_smallest",
        &["identities", "--nmax", "0", "--rmax", "1"],
    ),
    ok(
        "identities_10",
        &["identities", "--nmax", "10", "--rmax", "10"],
    ),
    usage("usage_missing_terms", &["encode", "7"]),
    usage("usage_bad_number", &["decode", "3,x,0"]),
];

pub struct Output {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

pub fn run_bin(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_combinadics"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn combinadics");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    Output {
        code: out.status.code().expect("exited normally"),
        stdout: out.stdout,
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.stdout"))
}

/// Runs one case; `Err` describes the first mismatch.
pub fn check_case(case: &Case) -> Result<(), String> {
    let expected =
        std::fs::read(golden_path(case.name)).map_err(|e| format!("{}: {e}", case.name))?;
    let out = run_bin(case.args, case.stdin);
    if out.code != case.exit {
        return Err(format!(
            "{}: exit {} (want {}), stderr {:?}",
            case.name, out.code, case.exit, out.stderr
        ));
    }
    if out.stdout != expected {
        return Err(format!(
            "{}: stdout {:?} (want {:?})",
            case.name,
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&expected)
        ));
    }
    match case.stderr_prefix {
        Some(prefix) if !out.stderr.starts_with(prefix) => Err(format!(
            "{}: stderr {:?} lacks {prefix:?}",
            case.name, out.stderr
        )),
        None if !out.stderr.is_empty() => {
            Err(format!("{}: unexpected stderr {:?}", case.name, out.stderr))
        }
        _ => Ok(()),
    }
}
