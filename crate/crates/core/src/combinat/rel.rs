//! Relations between finite sets as boolean matrices (target × source).

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, RingTag};
use crate::smc::{self, DualPair, SymmetricMonoidalCategory};

use super::finset::{FinSetCategory, Function};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    source: usize,
    target: usize,
    bits: Vec<bool>,
}

impl Relation {
    /// `bits[y][x]` says whether `x` is related to `y`.
    pub fn new(source: usize, target: usize, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != source * target {
            return Err(Error::DimensionMismatch(format!(
                "{} bits for a {target}x{source} relation",
                bits.len()
            )));
        }
        Ok(Relation {
            source,
            target,
            bits,
        })
    }

    pub fn empty(source: usize, target: usize) -> Self {
        Relation {
            source,
            target,
            bits: vec![false; source * target],
        }
    }

    pub fn from_pairs(source: usize, target: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut r = Self::empty(source, target);
        for &(x, y) in pairs {
            if x >= source || y >= target {
                return Err(Error::InvalidEntry(format!("pair ({x}, {y}) out of range")));
            }
            r.set(x, y, true);
        }
        Ok(r)
    }

    /// Parse `n m` then `n` rows of `m` bits: row `x` lists the `y` with `x R y`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::parse(hl, format!("bad size `{t}`")))
            })
            .collect::<Result<_>>()?;
        let [n, m] = dims[..] else {
            return Err(Error::parse(hl, "header must be `n m`"));
        };
        let mut r = Self::empty(n, m);
        let mut x = 0;
        for (line, row) in lines {
            if x == n {
                return Err(Error::parse(line, "more rows than declared"));
            }
            let bits: Vec<&str> = row.split_whitespace().collect();
            let bits: Vec<char> = if bits.len() == 1 && m > 1 {
                bits[0].chars().collect()
            } else {
                bits.iter().flat_map(|b| b.chars()).collect()
            };
            if bits.len() != m {
                return Err(Error::parse(
                    line,
                    format!("expected {m} bits, found {}", bits.len()),
                ));
            }
            for (y, b) in bits.iter().enumerate() {
                match b {
                    '0' => {}
                    '1' => r.set(x, y, true),
                    _ => return Err(Error::parse(line, format!("bad bit `{b}`"))),
                }
            }
            x += 1;
        }
        if x != n {
            return Err(Error::parse(hl, format!("declared {n} rows, found {x}")));
        }
        Ok(r)
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Whether `x` is related to `y`.
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.source + x]
    }

    pub fn set(&mut self, x: usize, y: usize, value: bool) {
        self.bits[y * self.source + x] = value;
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.source {
            for y in 0..self.target {
                if self.related(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn converse(&self) -> Relation {
        let mut r = Self::empty(self.target, self.source);
        for (x, y) in self.pairs() {
            r.set(y, x, true);
        }
        r
    }

    /// Every relation `[n] -> [m]`, bits read from a counter.
    pub fn all(n: usize, m: usize) -> impl Iterator<Item = Relation> {
        let k = n * m;
        (0u64..(1u64 << k)).map(move |mask| Relation {
            source: n,
            target: m,
            bits: (0..k).map(|i| mask & (1 << i) != 0).collect(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.source, self.target);
        for x in 0..self.source {
            let row: String = (0..self.target)
                .map(|y| if self.related(x, y) { '1' } else { '0' })
                .collect();
            out.push_str(&row);
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Relation({}->{}, {:?})",
            self.source,
            self.target,
            self.pairs()
        )
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RelCategory;

impl RelCategory {
    /// An endomorphism of the singleton as a truth value.
    pub fn truth(&self, r: &Relation) -> Result<bool> {
        if r.source != 1 || r.target != 1 {
            return Err(Error::type_mismatch("not an endomorphism of the unit"));
        }
        Ok(r.bits[0])
    }
}

impl SymmetricMonoidalCategory for RelCategory {
    type Object = usize;
    type Morphism = Relation;

    fn domain(&self, f: &Relation) -> usize {
        f.source
    }

    fn codomain(&self, f: &Relation) -> usize {
        f.target
    }

    fn identity(&self, a: &usize) -> Relation {
        let mut r = Relation::empty(*a, *a);
        for x in 0..*a {
            r.set(x, x, true);
        }
        r
    }

    fn compose(&self, g: &Relation, f: &Relation) -> Result<Relation> {
        if f.target != g.source {
            return Err(Error::type_mismatch(format!(
                "cannot compose relation from {} after one into {}",
                g.source, f.target
            )));
        }
        let mut r = Relation::empty(f.source, g.target);
        for x in 0..f.source {
            for y in 0..f.target {
                if f.related(x, y) {
                    for z in 0..g.target {
                        if g.related(y, z) {
                            r.set(x, z, true);
                        }
                    }
                }
            }
        }
        Ok(r)
    }

    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a * b
    }

    fn tensor_mor(&self, f: &Relation, g: &Relation) -> Result<Relation> {
        let mut r = Relation::empty(f.source * g.source, f.target * g.target);
        for (x, y) in f.pairs() {
            for (u, v) in g.pairs() {
                r.set(x * g.source + u, y * g.target + v, true);
            }
        }
        Ok(r)
    }

    fn unit(&self) -> usize {
        1
    }

    fn symmetry(&self, a: &usize, b: &usize) -> Relation {
        graph(&FinSetCategory.symmetry(a, b))
    }

    fn mor_eq(&self, f: &Relation, g: &Relation) -> bool {
        f == g
    }

    fn render(&self, f: &Relation) -> String {
        f.to_text()
    }
}

/// `η` and `ε` are both the identity relation, read as `1 -> X×X` and `X×X -> 1`.
pub fn rel_dual_pair(n: usize) -> DualPair<usize, Relation> {
    let diag: Vec<(usize, usize)> = (0..n).map(|x| (0, x * n + x)).collect();
    let eta = Relation::from_pairs(1, n * n, &diag).expect("in range");
    let eps = eta.converse();
    DualPair::new(n, n, eta, eps)
}

/// `Γ_f = {(x, f(x))}`.
pub fn graph(f: &Function) -> Relation {
    let pairs: Vec<(usize, usize)> = (0..f.source()).map(|x| (x, f.apply(x))).collect();
    Relation::from_pairs(f.source(), f.target(), &pairs).expect("images in range")
}

/// The trace of `Γ_f`: whether `f` has a fixed point.
pub fn rel_fixed_point_trace(f: &Function) -> Result<bool> {
    let c = RelCategory;
    let dp = rel_dual_pair(f.source());
    c.truth(&smc::trace(&c, &dp, &graph(f))?)
}

/// The trace of `Γ_f` with respect to the diagonal: the fixed points as a
/// relation `1 -> X`.
pub fn rel_fixed_point_set(f: &Function) -> Result<Relation> {
    let c = RelCategory;
    let n = f.source();
    let dp = rel_dual_pair(n);
    smc::trace_wrt_diagonal(&c, &dp, &n, &graph(&Function::diagonal(n)), &graph(f))
}

/// `Z[f]`: the 0/1 matrix with a 1 at `(f(x), x)`.
pub fn free_abelian(f: &Function) -> ExactMatrix {
    ExactMatrix::of_function(RingTag::Integers, f.target(), f.images())
}

/// `Z[g]` for `g: Q×M -> M`, a map `Z[Q] ⊗ Z[M] -> Z[M]`.
pub fn free_abelian_parametrized(q: usize, m: usize, images: &[usize]) -> Result<ExactMatrix> {
    if images.len() != q * m {
        return Err(Error::DimensionMismatch(format!(
            "{} images for a {q}x{m} domain",
            images.len()
        )));
    }
    Ok(free_abelian(&Function::new(images.to_vec(), m)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smc::verify_dual_pair;

    #[test]
    fn pairs_verify() {
        for n in 0..=4 {
            assert!(verify_dual_pair(&RelCategory, &rel_dual_pair(n)).unwrap());
        }
    }

    #[test]
    fn euler_characteristic_detects_nonempty_sets() {
        let c = RelCategory;
        for n in 0..=3 {
            let chi = smc::euler_characteristic(&c, &rel_dual_pair(n)).unwrap();
            assert_eq!(c.truth(&chi).unwrap(), n > 0);
        }
    }

    #[test]
    fn unit_endomorphisms_are_truth_values() {
        assert_eq!(Relation::all(1, 1).count(), 2);
    }

    #[test]
    fn graphs_compose() {
        let c = RelCategory;
        for f in Function::all_endos(3) {
            for g in Function::all_endos(3) {
                let gf = FinSetCategory.compose(&g, &f).unwrap();
                assert_eq!(c.compose(&graph(&g), &graph(&f)).unwrap(), graph(&gf));
            }
        }
        let constant = Function::new(vec![1, 1, 1], 2).unwrap();
        assert_eq!(graph(&constant).pairs(), vec![(0, 1), (1, 1), (2, 1)]);
    }

    #[test]
    fn fixed_point_examples() {
        let swap = Function::endo(vec![1, 0]).unwrap();
        assert!(!rel_fixed_point_trace(&swap).unwrap());
        assert!(rel_fixed_point_set(&swap).unwrap().pairs().is_empty());
        let id = Function::identity(3);
        assert!(rel_fixed_point_trace(&id).unwrap());
        assert_eq!(
            rel_fixed_point_set(&id).unwrap().pairs(),
            vec![(0, 0), (0, 1), (0, 2)]
        );
        let f = Function::endo(vec![1, 1, 0]).unwrap();
        assert!(rel_fixed_point_trace(&f).unwrap());
        assert_eq!(rel_fixed_point_set(&f).unwrap().pairs(), vec![(0, 1)]);
    }

    #[test]
    fn parse_round_trip() {
        let r = Relation::parse("2 3\n101\n0 1 0\n").unwrap();
        assert_eq!(r.pairs(), vec![(0, 0), (0, 2), (1, 1)]);
        assert_eq!(Relation::parse(&r.to_text()).unwrap(), r);
        assert!(Relation::parse("2 2\n10\n").is_err());
        assert!(Relation::parse("1 2\n12\n").is_err());
    }
}
