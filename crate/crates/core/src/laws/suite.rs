//! Running the laws over an instance and reporting the results.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::choice::{Chooser, Odometer, Sampler};
use crate::error::{Error, Result};
use crate::exactalg::RingTag;
use crate::smc::{
    swapped_dual_pair, tensor_dual_pair, verify_dual_pair, Mor, Obj, PairOf,
    SymmetricMonoidalCategory,
};

use super::checks::*;
use super::instances::{
    ChainInstance, CobInstance, Instance, MatInstance, RelInstance, SupInstance,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    DualPair,
    Cyclicity,
    TwistedCyclicity,
    Dualization,
    Tightening,
    Sliding,
    VanishingUnit,
    VanishingTensor,
    Superposing,
    DoubleSuperposing,
    CompositionRule,
    EndomorphismProduct,
    Yanking,
    FixedPointProperty,
}

impl Law {
    pub const ALL: [Law; 14] = [
        Law::DualPair,
        Law::Cyclicity,
        Law::TwistedCyclicity,
        Law::Dualization,
        Law::Tightening,
        Law::Sliding,
        Law::VanishingUnit,
        Law::VanishingTensor,
        Law::Superposing,
        Law::DoubleSuperposing,
        Law::CompositionRule,
        Law::EndomorphismProduct,
        Law::Yanking,
        Law::FixedPointProperty,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Law::DualPair => "dual_pair",
            Law::Cyclicity => "cyclicity",
            Law::TwistedCyclicity => "twisted_cyclicity",
            Law::Dualization => "dualization",
            Law::Tightening => "tightening",
            Law::Sliding => "sliding",
            Law::VanishingUnit => "vanishing_unit",
            Law::VanishingTensor => "vanishing_tensor",
            Law::Superposing => "superposing",
            Law::DoubleSuperposing => "double_superposing",
            Law::CompositionRule => "composition_rule",
            Law::EndomorphismProduct => "endomorphism_product",
            Law::Yanking => "yanking",
            Law::FixedPointProperty => "fixed_point_property",
        }
    }

    /// The statement each law checks.
    pub fn statement(self) -> &'static str {
        match self {
            Law::DualPair => "triangle identities for chosen, swapped and tensored pairs",
            Law::Cyclicity => "tr(fg) = tr(gf)",
            Law::TwistedCyclicity => "tr((g⊗1)(1⊗f)) = tr(𝔰(f⊗1)(1⊗g)𝔰)",
            Law::Dualization => "tr(f) = tr(𝔰 f∨ 𝔰)",
            Law::Tightening => "h∘tr(f)∘g = tr((1⊗h)f(g⊗1))",
            Law::Sliding => "tr((h⊗1)f) = tr(f(1⊗h))",
            Law::VanishingUnit => "tr over the unit is the identity operation",
            Law::VanishingTensor => "tr(f𝔰) = tr(tr(f))",
            Law::Superposing => "tr(𝔰(f⊗g)) = tr(f)⊗g",
            Law::DoubleSuperposing => "tr(𝔰(f⊗g)𝔰) = tr(f)⊗tr(g)",
            Law::CompositionRule => "tr((1⊗g)(f⊗1)) = tr(g)∘tr(f)",
            Law::EndomorphismProduct => "tr(f⊗g) = tr(f)⊗tr(g) = tr(f)∘tr(g)",
            Law::Yanking => "tr(1_{M⊗M}) = 1_M",
            Law::FixedPointProperty => "(f⊗h)Δ = Δf implies h∘tr(Δf) = tr(Δf)",
        }
    }
}

/// One line per law: id and the statement it checks.
pub fn coverage_manifest() -> String {
    Law::ALL
        .iter()
        .map(|l| format!("{}\t{}\n", l.id(), l.statement()))
        .collect()
}

pub const INSTANCES: [&str; 7] = ["mat_q", "mat_z", "mat_zp", "chain_q", "rel", "sup", "cob1"];

/// Cap on enumerated cases per law in exhaustive mode when none is given.
pub const EXHAUSTIVE_CAP: usize = 1 << 15;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Sampled cases per law; in exhaustive mode, the cap on enumerated cases.
    pub cases: usize,
    pub exhaustive: bool,
    /// Replace the instance's symmetry with a broken one (negative control).
    pub corrupted: bool,
    pub witness_dir: PathBuf,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            cases: 200,
            exhaustive: false,
            corrupted: false,
            witness_dir: std::env::temp_dir(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawResult {
    pub law: Law,
    pub passed: usize,
    pub total: usize,
    /// Failing case index and the witness file.
    pub failure: Option<(usize, PathBuf)>,
}

impl LawResult {
    pub fn line(&self) -> String {
        match &self.failure {
            None => format!("LAW {} PASS {}/{}", self.law.id(), self.passed, self.total),
            Some((k, path)) => format!(
                "LAW {} FAIL case={} witness={}",
                self.law.id(),
                k,
                path.display()
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub instance: String,
    pub results: Vec<LawResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.failure.is_none())
    }

    pub fn render(&self) -> String {
        self.results.iter().map(|r| r.line() + "\n").collect()
    }

    pub fn result(&self, law: Law) -> Option<&LawResult> {
        self.results.iter().find(|r| r.law == law)
    }
}

pub fn run_suite(instance: &str, config: &SuiteConfig) -> Result<Report> {
    let results = match (instance, config.corrupted) {
        ("chain_q", true) => run_all(
            instance,
            &ChainInstance::corrupted(RingTag::Rationals),
            config,
        )?,
        (_, true) => return Err(Error::UnknownInstance(format!("{instance} (corrupted)"))),
        ("mat_q", _) => run_all(instance, &MatInstance::new(RingTag::Rationals), config)?,
        ("mat_z", _) => run_all(instance, &MatInstance::new(RingTag::Integers), config)?,
        ("mat_zp", _) => run_all(instance, &MatInstance::new(RingTag::IntegersMod(3)), config)?,
        ("chain_q", _) => run_all(instance, &ChainInstance::new(RingTag::Rationals), config)?,
        ("rel", _) => {
            let max_size = if config.exhaustive { 3 } else { 4 };
            run_all(instance, &RelInstance { max_size }, config)?
        }
        ("sup", _) => run_all(instance, &SupInstance::new(), config)?,
        ("cob1", _) => run_all(instance, &CobInstance, config)?,
        _ => return Err(Error::UnknownInstance(instance.to_string())),
    };
    Ok(Report {
        instance: instance.to_string(),
        results,
    })
}

fn run_all<I: Instance>(name: &str, inst: &I, config: &SuiteConfig) -> Result<Vec<LawResult>> {
    Law::ALL
        .iter()
        .enumerate()
        .map(|(index, &law)| run_law(name, inst, law, index as u64, config))
        .collect()
}

fn run_law<I: Instance>(
    name: &str,
    inst: &I,
    law: Law,
    index: u64,
    config: &SuiteConfig,
) -> Result<LawResult> {
    let mut odometer = Odometer::new();
    let mut total = 0;
    while total < config.cases {
        let k = total;
        let mut sampler = Sampler::new(config.seed, (index << 32) | k as u64);
        let ch: &mut dyn Chooser = if config.exhaustive {
            &mut odometer
        } else {
            &mut sampler
        };
        let mut case = Case {
            inst,
            ch,
            log: String::new(),
        };
        let outcome = case.run(law);
        let log = case.log;
        total += 1;
        let failure = match outcome {
            Ok(true) => None,
            Ok(false) => Some("outcome fail".to_string()),
            Err(e) => Some(format!("outcome error: {e}")),
        };
        if let Some(reason) = failure {
            let path = write_witness(name, law, k, config, &reason, &log)?;
            return Ok(LawResult {
                law,
                passed: k,
                total,
                failure: Some((k, path)),
            });
        }
        if config.exhaustive && !odometer.advance() {
            break;
        }
    }
    Ok(LawResult {
        law,
        passed: total,
        total,
        failure: None,
    })
}

fn write_witness(
    name: &str,
    law: Law,
    k: usize,
    config: &SuiteConfig,
    reason: &str,
    log: &str,
) -> Result<PathBuf> {
    let path = witness_path(&config.witness_dir, name, law, k);
    let mode = if config.exhaustive {
        "exhaustive"
    } else {
        "sampled"
    };
    let text = format!(
        "instance {name}\nlaw {}\nseed {}\ncase {k}\nmode {mode}\n{reason}\n{log}",
        law.id(),
        config.seed
    );
    fs::create_dir_all(&config.witness_dir)
        .and_then(|_| fs::write(&path, text))
        .map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot write witness {}: {e}", path.display()),
        })?;
    Ok(path)
}

fn witness_path(dir: &Path, name: &str, law: Law, k: usize) -> PathBuf {
    dir.join(format!("dualtrace-{name}-{}-case{k}.txt", law.id()))
}

/// Generation state for one case; every generated input is logged so a
/// failing case serializes to a witness.
struct Case<'a, I: Instance> {
    inst: &'a I,
    ch: &'a mut dyn Chooser,
    log: String,
}

impl<I: Instance> Case<'_, I> {
    fn c(&self) -> &I::C {
        self.inst.category()
    }

    fn pair(&mut self, label: &str) -> Result<PairOf<I::C>> {
        let dp = self.inst.dualizable(self.ch)?;
        let text = self.inst.render_obj(&dp.object);
        let _ = write!(self.log, "== dualizable {label}\n{text}");
        Ok(dp)
    }

    fn obj(&mut self, label: &str) -> Result<Obj<I::C>> {
        let a = self.inst.object(self.ch)?;
        let text = self.inst.render_obj(&a);
        let _ = write!(self.log, "== object {label}\n{text}");
        Ok(a)
    }

    fn mor(&mut self, label: &str, from: &Obj<I::C>, to: &Obj<I::C>) -> Result<Mor<I::C>> {
        let f = self.inst.morphism(self.ch, from, to)?;
        self.record(label, &f);
        Ok(f)
    }

    fn record(&mut self, label: &str, f: &Mor<I::C>) {
        let text = self.c().render(f);
        let _ = write!(self.log, "== morphism {label}\n{text}");
    }

    fn tensor(&self, objs: &[&Obj<I::C>]) -> Obj<I::C> {
        self.c().tensor_objs(objs)
    }

    fn run(&mut self, law: Law) -> Result<bool> {
        match law {
            Law::DualPair => {
                let a = self.pair("M")?;
                let b = self.pair("N")?;
                let c = self.c();
                Ok(verify_dual_pair(c, &a)?
                    && verify_dual_pair(c, &swapped_dual_pair(c, &a)?)?
                    && verify_dual_pair(c, &tensor_dual_pair(c, &a, &b)?)?)
            }
            Law::Cyclicity => {
                let (a, b) = (self.pair("M")?, self.pair("N")?);
                let f = self.mor("f", &a.object, &b.object)?;
                let g = self.mor("g", &b.object, &a.object)?;
                check_cyclicity(self.c(), &a, &b, &f, &g)
            }
            Law::TwistedCyclicity => {
                let (a, b) = (self.pair("M")?, self.pair("N")?);
                let (q, p, k, l) = (
                    self.obj("Q")?,
                    self.obj("P")?,
                    self.obj("K")?,
                    self.obj("L")?,
                );
                let f = self.mor(
                    "f",
                    &self.tensor(&[&q, &a.object]),
                    &self.tensor(&[&b.object, &p]),
                )?;
                let g = self.mor(
                    "g",
                    &self.tensor(&[&k, &b.object]),
                    &self.tensor(&[&a.object, &l]),
                )?;
                check_twisted_cyclicity(self.c(), &a, &b, &q, &p, &k, &l, &f, &g)
            }
            Law::Dualization => {
                let a = self.pair("M")?;
                let (q, p) = (self.obj("Q")?, self.obj("P")?);
                let f = self.twisted("f", &a, &q, &p)?;
                check_dualization(self.c(), &a, &q, &p, &f)
            }
            Law::Tightening => {
                let a = self.pair("M")?;
                let (q2, q, p, p2) = (
                    self.obj("Q'")?,
                    self.obj("Q")?,
                    self.obj("P")?,
                    self.obj("P'")?,
                );
                let f = self.twisted("f", &a, &q, &p)?;
                let g = self.mor("g", &q2, &q)?;
                let h = self.mor("h", &p, &p2)?;
                check_tightening(self.c(), &a, &q2, &q, &p, &p2, &f, &g, &h)
            }
            Law::Sliding => {
                let (a, b) = (self.pair("M")?, self.pair("N")?);
                let (q, p) = (self.obj("Q")?, self.obj("P")?);
                let f = self.mor(
                    "f",
                    &self.tensor(&[&q, &a.object]),
                    &self.tensor(&[&b.object, &p]),
                )?;
                let h = self.mor("h", &b.object, &a.object)?;
                check_sliding(self.c(), &a, &b, &q, &p, &f, &h)
            }
            Law::VanishingUnit => {
                let (q, p) = (self.obj("Q")?, self.obj("P")?);
                let f = self.mor("f", &q, &p)?;
                check_vanishing_unit(self.c(), &q, &p, &f)
            }
            Law::VanishingTensor => {
                let (a, b) = (self.pair("M")?, self.pair("N")?);
                let (q, p) = (self.obj("Q")?, self.obj("P")?);
                let from = self.tensor(&[&q, &b.object, &a.object]);
                let to = self.tensor(&[&a.object, &b.object, &p]);
                let f = self.mor("f", &from, &to)?;
                check_vanishing_tensor(self.c(), &a, &b, &q, &p, &f)
            }
            Law::Superposing => {
                let a = self.pair("M")?;
                let (q, p, k, l) = (
                    self.obj("Q")?,
                    self.obj("P")?,
                    self.obj("K")?,
                    self.obj("L")?,
                );
                let f = self.twisted("f", &a, &q, &p)?;
                let g = self.mor("g", &k, &l)?;
                check_superposing(self.c(), &a, &q, &p, &k, &l, &f, &g)
            }
            Law::DoubleSuperposing => {
                let (a, b) = (self.pair("M")?, self.pair("N")?);
                let (q, p, k, l) = (
                    self.obj("Q")?,
                    self.obj("P")?,
                    self.obj("K")?,
                    self.obj("L")?,
                );
                let f = self.twisted("f", &a, &q, &p)?;
                let g = self.twisted("g", &b, &k, &l)?;
                check_double_superposing(self.c(), &a, &b, &q, &p, &k, &l, &f, &g)
            }
            Law::CompositionRule => {
                let (a, b) = (self.pair("M")?, self.pair("N")?);
                let (q, p, k) = (self.obj("Q")?, self.obj("P")?, self.obj("K")?);
                let f = self.twisted("f", &a, &q, &p)?;
                let g = self.twisted("g", &b, &p, &k)?;
                check_composition_rule(self.c(), &a, &b, &q, &p, &k, &f, &g)
            }
            Law::EndomorphismProduct => {
                let (a, b) = (self.pair("M")?, self.pair("N")?);
                let f = self.mor("f", &a.object, &a.object)?;
                let g = self.mor("g", &b.object, &b.object)?;
                check_endomorphism_product(self.c(), &a, &b, &f, &g)
            }
            Law::Yanking => {
                let a = self.pair("M")?;
                check_yanking(self.c(), &a)
            }
            Law::FixedPointProperty => {
                let case = self.inst.diagonal(self.ch)?;
                let text = self.inst.render_obj(&case.pair.object);
                let _ = write!(self.log, "== dualizable M\n{text}");
                self.record("delta", &case.delta);
                self.record("f", &case.f);
                self.record("h", &case.h);
                let out = check_fixed_point_property(
                    self.c(),
                    &case.pair,
                    &case.p,
                    &case.delta,
                    &case.f,
                    &case.h,
                )?;
                // generators only produce cases satisfying the hypothesis
                Ok(out.unwrap_or(false))
            }
        }
    }

    /// A morphism `Q ⊗ M -> M ⊗ P`.
    fn twisted(
        &mut self,
        label: &str,
        dp: &PairOf<I::C>,
        q: &Obj<I::C>,
        p: &Obj<I::C>,
    ) -> Result<Mor<I::C>> {
        let from = self.tensor(&[q, &dp.object]);
        let to = self.tensor(&[&dp.object, p]);
        self.mor(label, &from, &to)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(cases: usize) -> SuiteConfig {
        SuiteConfig {
            cases,
            witness_dir: std::env::temp_dir().join("dualtrace-unit"),
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn every_instance_passes_a_few_cases() {
        for name in INSTANCES {
            let report = run_suite(name, &config(10)).unwrap();
            assert!(report.all_passed(), "{name}:\n{}", report.render());
            assert_eq!(report.results.len(), Law::ALL.len());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("mat_z", &config(5)).unwrap();
        let b = run_suite("mat_z", &config(5)).unwrap();
        assert_eq!(a, b);
        assert!(a.render().lines().all(|l| l.ends_with("PASS 5/5")));
    }

    #[test]
    fn unknown_instances_are_errors() {
        assert!(matches!(
            run_suite("nope", &config(1)),
            Err(Error::UnknownInstance(_))
        ));
        let corrupted = SuiteConfig {
            corrupted: true,
            ..config(1)
        };
        assert!(run_suite("rel", &corrupted).is_err());
    }

    #[test]
    fn corrupted_symmetry_breaks_cyclicity() {
        let cfg = SuiteConfig {
            corrupted: true,
            ..config(200)
        };
        let report = run_suite("chain_q", &cfg).unwrap();
        let r = report.result(Law::Cyclicity).unwrap();
        let (_, path) = r.failure.as_ref().expect("cyclicity should fail");
        let text = fs::read_to_string(path).unwrap();
        assert!(text.starts_with("instance chain_q\nlaw cyclicity\n"));
        assert!(text.contains("== morphism f"));
    }

    #[test]
    fn exhaustive_mode_terminates_on_small_spaces() {
        let cfg = SuiteConfig {
            exhaustive: true,
            cases: 100_000,
            ..config(0)
        };
        let report = run_suite("cob1", &cfg).unwrap();
        assert!(report.all_passed(), "{}", report.render());
        // yanking enumerates the two dualizable sizes
        assert_eq!(report.result(Law::Yanking).unwrap().total, 2);
    }

    #[test]
    fn manifest_lists_every_law() {
        assert_eq!(coverage_manifest().lines().count(), Law::ALL.len());
    }
}
