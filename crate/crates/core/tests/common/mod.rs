#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn read(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

/// Run the binary; returns stdout and the exit code.
pub fn run_cli(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_dualtrace"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

/// A checked-in invocation: arguments (data file names are resolved), the
/// expected output file, and the library call producing the same text.
pub struct Golden {
    pub args: Vec<String>,
    pub expected: &'static str,
    pub library: Box<dyn Fn() -> String>,
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

fn lefschetz(
    complex: &'static str,
    map: &'static str,
    coeff: &'static str,
    expected: &'static str,
) -> Golden {
    Golden {
        args: vec![
            "lefschetz".into(),
            "--complex".into(),
            path(complex),
            "--map".into(),
            path(map),
            "--coeff".into(),
            coeff.into(),
        ],
        expected,
        library: Box::new(move || {
            dualtrace::cli::cmd_lefschetz(&read(complex), &read(map), coeff.parse().unwrap())
                .unwrap()
        }),
    }
}

pub fn golden_cases() -> Vec<Golden> {
    vec![
        lefschetz(
            "octahedron.scx",
            "octahedron-identity.smap",
            "Q",
            "octahedron-identity-q.out",
        ),
        lefschetz(
            "octahedron.scx",
            "octahedron-identity.smap",
            "Z",
            "octahedron-identity-z.out",
        ),
        lefschetz(
            "octahedron.scx",
            "octahedron-antipodal.smap",
            "Z",
            "octahedron-antipodal-z.out",
        ),
        lefschetz(
            "circle.scx",
            "circle-identity.smap",
            "Q",
            "circle-identity-q.out",
        ),
        lefschetz(
            "circle.scx",
            "circle-rotation.smap",
            "Q",
            "circle-rotation-q.out",
        ),
        lefschetz(
            "circle.scx",
            "circle-reflection.smap",
            "Zp:3",
            "circle-reflection-z3.out",
        ),
        Golden {
            args: vec!["fixedpoints".into(), "--fn".into(), path("endo.fn")],
            expected: "endo.out",
            library: Box::new(|| dualtrace::cli::cmd_fixedpoints(&read("endo.fn")).unwrap()),
        },
        Golden {
            args: vec![
                "alexandrov".into(),
                "--space".into(),
                path("sierpinski.pre"),
                "--map".into(),
                "1 1".into(),
            ],
            expected: "sierpinski-const1.out",
            library: Box::new(|| {
                dualtrace::cli::cmd_alexandrov(&read("sierpinski.pre"), "1 1").unwrap()
            }),
        },
        Golden {
            args: vec![
                "cob1".into(),
                "--program".into(),
                path("three-strand.cob"),
                "--tft".into(),
                "3".into(),
            ],
            expected: "three-strand-tft3.out",
            library: Box::new(|| {
                dualtrace::cli::cmd_cob1(&read("three-strand.cob"), Some(3)).unwrap()
            }),
        },
        Golden {
            args: vec!["cob1".into(), "--program".into(), path("snake.cob")],
            expected: "snake.out",
            library: Box::new(|| dualtrace::cli::cmd_cob1(&read("snake.cob"), None).unwrap()),
        },
    ]
}

/// Check one golden case; `Err` describes the mismatch.
pub fn check_golden(g: &Golden) -> Result<(), String> {
    let args: Vec<&str> = g.args.iter().map(String::as_str).collect();
    let (stdout, code) = run_cli(&args);
    let expected = read(&format!("golden/{}", g.expected));
    if code != 0 {
        return Err(format!("{}: exit code {code}", g.expected));
    }
    if stdout != expected {
        return Err(format!(
            "{}: got\n{stdout}\nexpected\n{expected}",
            g.expected
        ));
    }
    if (g.library)() != stdout {
        return Err(format!("{}: library output differs", g.expected));
    }
    Ok(())
}
