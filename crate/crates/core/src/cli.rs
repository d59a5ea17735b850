//! The command-line subcommands as library functions from input text to
//! report text.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::combinat::{
    alexandrov_trace, cob1_trace, free_abelian, rel_fixed_point_trace, run_program, Function,
    Preorder,
};
use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, RingTag};
use crate::functors::tft_value;
use crate::laws::{run_suite, Report, SuiteConfig};
use crate::linear::simplicial::{lefschetz_mod, torsion_free_lefschetz};
use crate::linear::{
    lefschetz_verdict, mat_dual_pair, MatCategory, SimplicialComplex, SimplicialMap, Verdict,
};
use crate::smc::{trace, trace_wrt_diagonal};

/// Coefficients for `lefschetz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    Rationals,
    Integers,
    Prime(u64),
}

impl std::str::FromStr for Coefficients {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(Coefficients::Rationals),
            "Z" => Ok(Coefficients::Integers),
            _ => {
                let p = s
                    .strip_prefix("Zp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .filter(|&p| p >= 2)
                    .ok_or_else(|| {
                        Error::parse(
                            0,
                            format!("bad coefficients `{s}`, expected Q, Z or Zp:<p>"),
                        )
                    })?;
                Ok(Coefficients::Prime(p))
            }
        }
    }
}

/// `L = <n>` and the verdict; over `Z` also the comparison with the trace
/// on homology modulo torsion.
pub fn cmd_lefschetz(complex: &str, map: &str, coeff: Coefficients) -> Result<String> {
    let k = SimplicialComplex::parse(complex)?;
    let phi = SimplicialMap::parse(map, &k, &k)?;
    let mut out = String::new();
    match coeff {
        Coefficients::Rationals => {
            let (l, verdict) = lefschetz_verdict(&phi)?;
            let _ = writeln!(out, "L = {l}\n{verdict}");
        }
        Coefficients::Integers => {
            let l = crate::linear::simplicial::lefschetz_over(&phi, RingTag::Integers)?
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::InvalidEntry("Lefschetz number out of range".into()))?;
            let free = torsion_free_lefschetz(&phi)?;
            let agreement = if free == l { "agrees" } else { "DISAGREES" };
            let _ = writeln!(out, "L = {l}\n{}", verdict(l != 0));
            let _ = writeln!(out, "torsion-free L = {free} ({agreement})");
        }
        Coefficients::Prime(p) => {
            let l = lefschetz_mod(&phi, p)?;
            let _ = writeln!(out, "L = {l} (mod {p})\n{}", verdict(l != 0));
        }
    }
    Ok(out)
}

fn verdict(nonzero: bool) -> Verdict {
    if nonzero {
        Verdict::FixedPointGuaranteed
    } else {
        Verdict::Inconclusive
    }
}

/// Fixed-point index from the trace of `Z[f]`, the fixed set from the
/// diagonal twisted trace, and the truth value of the trace in relations.
pub fn cmd_fixedpoints(function: &str) -> Result<String> {
    let f = Function::parse_endo(function)?;
    let n = f.source();
    let c = MatCategory::new(RingTag::Integers);
    let dp = mat_dual_pair(RingTag::Integers, n);
    let zf = free_abelian(&f);
    let index = c.scalar(&trace(&c, &dp, &zf)?)?;
    let delta = free_abelian(&Function::diagonal(n));
    let vector: ExactMatrix = trace_wrt_diagonal(&c, &dp, &n, &delta, &zf)?;
    let fixed: Vec<String> = (0..n)
        .filter(|&x| !num_traits::Zero::is_zero(vector.get(x, 0)))
        .map(|x| x.to_string())
        .collect();
    let rel = rel_fixed_point_trace(&f)?;
    Ok(format!(
        "index = {index}\nfixed = {{{}}}\nrel_trace = {}\n",
        fixed.join(","),
        u8::from(rel)
    ))
}

/// Parse a line of images such as `1 1 0`.
pub fn parse_images(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::parse(1, format!("bad image `{t}`")))
        })
        .collect()
}

/// The trace bit of `f⁻¹` on down-sets and, when it is 1, a point `a` with
/// `a ≤ f(a)`.
pub fn cmd_alexandrov(space: &str, images: &str) -> Result<String> {
    let p = Preorder::parse(space)?;
    let f = parse_images(images)?;
    let bit = alexandrov_trace(&p, &f)?;
    let mut out = format!("trace = {}\n", u8::from(bit));
    if bit {
        if let Some(a) = (0..p.len()).find(|&a| p.leq(a, f[a])) {
            let _ = writeln!(out, "witness = {a}");
        }
    }
    Ok(out)
}

/// The composite of a cobordism program, its trace when it is an
/// endomorphism, and optionally its value under the `d`-dimensional field
/// theory.
pub fn cmd_cob1(program: &str, tft: Option<usize>) -> Result<String> {
    let f = run_program(program)?;
    let mut out = f.to_text();
    let endo = f.inputs() == f.outputs();
    if endo {
        let _ = writeln!(out, "trace circles = {}", cob1_trace(&f)?);
    }
    if let Some(d) = tft {
        if d == 0 {
            return Err(Error::InvalidEntry(
                "field theory dimension must be positive".into(),
            ));
        }
        if endo {
            let closed = crate::combinat::Cobordism1::circles_only(cob1_trace(&f)?);
            let value = tft_value(d, &closed)?;
            let _ = writeln!(out, "tft({d}) = {}", value.get(0, 0));
        } else {
            let _ = write!(out, "tft({d}) =\n{}", tft_value(d, &f)?.to_text());
        }
    }
    Ok(out)
}

/// Run the law suite; the flag is true when every law passed.
pub fn cmd_laws(instance: &str, config: &SuiteConfig) -> Result<(String, bool)> {
    let report: Report = run_suite(instance, config)?;
    Ok((report.render(), report.all_passed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CIRCLE: &str = "simplex a b\nsimplex b c\nsimplex a c\n";

    #[test]
    fn coefficients_parse() {
        assert_eq!(
            "Q".parse::<Coefficients>().unwrap(),
            Coefficients::Rationals
        );
        assert_eq!(
            "Zp:5".parse::<Coefficients>().unwrap(),
            Coefficients::Prime(5)
        );
        assert!("Zp:1".parse::<Coefficients>().is_err());
        assert!("R".parse::<Coefficients>().is_err());
    }

    #[test]
    fn circle_lefschetz() {
        let rotation = "a b\nb c\nc a\n";
        let reflection = "a a\nb c\nc b\n";
        assert_eq!(
            cmd_lefschetz(CIRCLE, rotation, Coefficients::Rationals).unwrap(),
            "L = 0\nINCONCLUSIVE\n"
        );
        assert_eq!(
            cmd_lefschetz(CIRCLE, reflection, Coefficients::Integers).unwrap(),
            "L = 2\nFIXED_POINT_GUARANTEED\ntorsion-free L = 2 (agrees)\n"
        );
        assert_eq!(
            cmd_lefschetz(CIRCLE, reflection, Coefficients::Prime(2)).unwrap(),
            "L = 0 (mod 2)\nINCONCLUSIVE\n"
        );
        assert!(cmd_lefschetz(CIRCLE, "a a\nb b\n", Coefficients::Rationals).is_err());
    }

    #[test]
    fn fixed_points() {
        assert_eq!(
            cmd_fixedpoints("3\n0 1 2\n").unwrap(),
            "index = 3\nfixed = {0,1,2}\nrel_trace = 1\n"
        );
        assert_eq!(
            cmd_fixedpoints("3\n1 2 0\n").unwrap(),
            "index = 0\nfixed = {}\nrel_trace = 0\n"
        );
        assert_eq!(
            cmd_fixedpoints("3\n1 1 0\n").unwrap(),
            "index = 1\nfixed = {1}\nrel_trace = 1\n"
        );
        assert!(cmd_fixedpoints("2\n0 5\n").is_err());
    }

    #[test]
    fn alexandrov() {
        let s = Preorder::sierpinski().to_text();
        assert_eq!(
            cmd_alexandrov(&s, "1 1").unwrap(),
            "trace = 1\nwitness = 0\n"
        );
        assert!(cmd_alexandrov(&s, "1 0").is_err());
        let discrete = Preorder::discrete(2).to_text();
        assert_eq!(cmd_alexandrov(&discrete, "1 0").unwrap(), "trace = 0\n");
    }

    #[test]
    fn cobordisms() {
        let out = cmd_cob1("id3; trace", Some(2)).unwrap();
        assert!(out.ends_with("trace circles = 3\ntft(2) = 8\n"), "{out}");
        let out = cmd_cob1("swap; trace", None).unwrap();
        assert!(out.ends_with("trace circles = 1\n"));
        assert!(cmd_cob1("id1; trace", Some(2))
            .unwrap()
            .ends_with("tft(2) = 2\n"));
        assert!(cmd_cob1("id2; id3", None).is_err());
    }
}
