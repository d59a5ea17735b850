//! Suplattices of down-sets of finite preorders.
//!
//! A finite preorder `P` stands for the lattice `D(P)` of its down-sets
//! (the open sets of the Alexandrov space `P`). A join-preserving map
//! `D(P) -> D(Q)` is determined by its values on principal down-sets, and
//! `D(P) ⊗ D(Q) = D(P × Q)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::smc::{self, DualPair, SymmetricMonoidalCategory};

/// A subset of the points of a preorder.
pub type PointSet = Vec<bool>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    points: usize,
    leq: Vec<bool>,
}

impl Preorder {
    /// The reflexive-transitive closure of the given `i ≤ j` pairs.
    pub fn new(points: usize, generators: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; points * points];
        for i in 0..points {
            leq[i * points + i] = true;
        }
        for &(i, j) in generators {
            if i >= points || j >= points {
                return Err(Error::InvalidPreorder(format!(
                    "pair ({i}, {j}) out of range"
                )));
            }
            leq[i * points + j] = true;
        }
        for k in 0..points {
            for i in 0..points {
                if leq[i * points + k] {
                    for j in 0..points {
                        if leq[k * points + j] {
                            leq[i * points + j] = true;
                        }
                    }
                }
            }
        }
        Ok(Preorder { points, leq })
    }

    pub fn discrete(points: usize) -> Self {
        Self::new(points, &[]).expect("no generators")
    }

    /// `0 ≤ 1 ≤ ... ≤ n-1`
    pub fn chain(points: usize) -> Self {
        let gens: Vec<(usize, usize)> = (1..points).map(|i| (i - 1, i)).collect();
        Self::new(points, &gens).expect("in range")
    }

    /// The two-point space `{0 ≤ 1}`.
    pub fn sierpinski() -> Self {
        Self::chain(2)
    }

    /// Parse `points n` followed by `le i j` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut points = None;
        let mut gens = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let num = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(lineno, format!("bad number `{t}`")))
            };
            match words[..] {
                ["points", n] if points.is_none() => points = Some(num(n)?),
                ["le", i, j] if points.is_some() => gens.push((num(i)?, num(j)?)),
                _ => return Err(Error::parse(lineno, format!("unexpected line `{line}`"))),
            }
        }
        let points = points.ok_or_else(|| Error::parse(1, "missing `points n`"))?;
        Self::new(points, &gens).map_err(|e| Error::parse(0, e.to_string()))
    }

    pub fn len(&self) -> usize {
        self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.points + j]
    }

    pub fn opposite(&self) -> Preorder {
        let n = self.points;
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq(j, i);
            }
        }
        Preorder { points: n, leq }
    }

    /// Product order on pairs `(a, b) -> a·|Q| + b`.
    pub fn product(&self, other: &Preorder) -> Preorder {
        let (n, m) = (self.points, other.points);
        let size = n * m;
        let mut leq = vec![false; size * size];
        for a in 0..n {
            for b in 0..m {
                for c in 0..n {
                    for d in 0..m {
                        leq[(a * m + b) * size + c * m + d] = self.leq(a, c) && other.leq(b, d);
                    }
                }
            }
        }
        Preorder { points: size, leq }
    }

    /// `↓a`
    pub fn principal(&self, a: usize) -> PointSet {
        (0..self.points).map(|x| self.leq(x, a)).collect()
    }

    pub fn is_down_set(&self, s: &[bool]) -> bool {
        s.len() == self.points
            && (0..self.points).all(|y| !s[y] || (0..self.points).all(|x| !self.leq(x, y) || s[x]))
    }

    /// The smallest down-set containing `s`.
    pub fn down_closure(&self, s: &[bool]) -> PointSet {
        (0..self.points)
            .map(|x| (0..self.points).any(|y| s[y] && self.leq(x, y)))
            .collect()
    }

    /// Every down-set, in order of the bitmask of its members.
    pub fn down_sets(&self) -> Vec<PointSet> {
        (0u64..(1u64 << self.points))
            .map(|mask| {
                (0..self.points)
                    .map(|i| mask & (1 << i) != 0)
                    .collect::<Vec<_>>()
            })
            .filter(|s| self.is_down_set(s))
            .collect()
    }

    pub fn is_monotone(&self, f: &[usize]) -> bool {
        f.len() == self.points
            && f.iter().all(|&y| y < self.points)
            && (0..self.points)
                .all(|a| (0..self.points).all(|b| !self.leq(a, b) || self.leq(f[a], f[b])))
    }

    /// All preorders on `n` points, one per isomorphism class.
    pub fn all_up_to_iso(n: usize) -> Vec<Preorder> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let perms = permutations(n);
        let mut seen: Vec<Vec<bool>> = Vec::new();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << pairs.len()) {
            let gens: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &p)| p)
                .collect();
            let p = Preorder::new(n, &gens).expect("in range");
            // keep only transitive generator sets so each preorder appears once
            if p.leq.iter().filter(|&&b| b).count() != gens.len() + n {
                continue;
            }
            let canonical = perms
                .iter()
                .map(|pi| {
                    let mut leq = vec![false; n * n];
                    for i in 0..n {
                        for j in 0..n {
                            leq[pi[i] * n + pi[j]] = p.leq(i, j);
                        }
                    }
                    leq
                })
                .min()
                .unwrap_or_default();
            if !seen.contains(&canonical) {
                seen.push(canonical);
                out.push(p);
            }
        }
        out
    }

    /// All monotone endomaps.
    pub fn monotone_endos(&self) -> Vec<Vec<usize>> {
        let n = self.points;
        let count = (n as u32).checked_pow(n as u32).unwrap_or(0).max(1) as usize;
        (0..count)
            .map(|mut k| {
                let mut f = vec![0; n];
                for x in (0..n).rev() {
                    f[x] = k % n;
                    k /= n;
                }
                f
            })
            .filter(|f| self.is_monotone(f))
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("points {}\n", self.points);
        for i in 0..self.points {
            for j in 0..self.points {
                if i != j && self.leq(i, j) {
                    out.push_str(&format!("le {i} {j}\n"));
                }
            }
        }
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel: Vec<(usize, usize)> = (0..self.points)
            .flat_map(|i| (0..self.points).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && self.leq(i, j))
            .collect();
        write!(f, "Preorder({}, {rel:?})", self.points)
    }
}

/// A join-preserving map `D(P) -> D(Q)`, given by the image of each `↓a`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SupMorphism {
    source: Preorder,
    target: Preorder,
    images: Vec<PointSet>,
}

impl SupMorphism {
    pub fn new(source: Preorder, target: Preorder, images: Vec<PointSet>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} points",
                images.len(),
                source.len()
            )));
        }
        for (a, s) in images.iter().enumerate() {
            if !target.is_down_set(s) {
                return Err(Error::NotMonotone(format!(
                    "image of point {a} is not a down-set"
                )));
            }
        }
        for a in 0..source.len() {
            for b in 0..source.len() {
                if source.leq(a, b) && !subset(&images[a], &images[b]) {
                    return Err(Error::NotMonotone(format!(
                        "{a} ≤ {b} but the image of {a} is not below that of {b}"
                    )));
                }
            }
        }
        Ok(SupMorphism {
            source,
            target,
            images,
        })
    }

    /// `U -> f⁻¹(U)` for a monotone `f: P -> Q`, a map `D(Q) -> D(P)`.
    pub fn inverse_image(p: &Preorder, q: &Preorder, f: &[usize]) -> Result<Self> {
        check_monotone(p, q, f)?;
        let images = (0..q.len())
            .map(|b| (0..p.len()).map(|x| q.leq(f[x], b)).collect())
            .collect();
        SupMorphism::new(q.clone(), p.clone(), images)
    }

    /// `U -> ↓f(U)` for a monotone `f: P -> Q`.
    pub fn direct_image(p: &Preorder, q: &Preorder, f: &[usize]) -> Result<Self> {
        check_monotone(p, q, f)?;
        let images = (0..p.len()).map(|a| q.principal(f[a])).collect();
        SupMorphism::new(p.clone(), q.clone(), images)
    }

    pub fn source(&self) -> &Preorder {
        &self.source
    }

    pub fn target(&self) -> &Preorder {
        &self.target
    }

    pub fn image_of_point(&self, a: usize) -> &PointSet {
        &self.images[a]
    }

    /// Value on an arbitrary down-set: the union of the images of its points.
    pub fn apply(&self, s: &[bool]) -> PointSet {
        let mut out = vec![false; self.target.len()];
        for (a, &inside) in s.iter().enumerate() {
            if inside {
                for (o, &x) in out.iter_mut().zip(&self.images[a]) {
                    *o |= x;
                }
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "source\n{}target\n{}",
            self.source.to_text(),
            self.target.to_text()
        );
        for (a, s) in self.images.iter().enumerate() {
            let members: Vec<String> = (0..s.len())
                .filter(|&i| s[i])
                .map(|i| i.to_string())
                .collect();
            out.push_str(&format!("image {a} {{{}}}\n", members.join(" ")));
        }
        out
    }
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

fn check_monotone(p: &Preorder, q: &Preorder, f: &[usize]) -> Result<()> {
    if f.len() != p.len() || f.iter().any(|&y| y >= q.len()) {
        return Err(Error::NotMonotone("map has the wrong shape".into()));
    }
    for a in 0..p.len() {
        for b in 0..p.len() {
            if p.leq(a, b) && !q.leq(f[a], f[b]) {
                return Err(Error::NotMonotone(format!(
                    "{a} ≤ {b} but {} is not ≤ {}",
                    f[a], f[b]
                )));
            }
        }
    }
    Ok(())
}

impl fmt::Debug for SupMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<Vec<usize>> = self
            .images
            .iter()
            .map(|s| (0..s.len()).filter(|&i| s[i]).collect())
            .collect();
        write!(f, "Sup({:?} -> {:?}, {images:?})", self.source, self.target)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SupCategory;

impl SupCategory {
    /// An endomorphism of the unit `{0 ≤ 1}` as a bit.
    pub fn bit(&self, f: &SupMorphism) -> Result<bool> {
        if f.source.len() != 1 || f.target.len() != 1 {
            return Err(Error::type_mismatch("not an endomorphism of the unit"));
        }
        Ok(f.images[0][0])
    }
}

impl SymmetricMonoidalCategory for SupCategory {
    type Object = Preorder;
    type Morphism = SupMorphism;

    fn domain(&self, f: &SupMorphism) -> Preorder {
        f.source.clone()
    }

    fn codomain(&self, f: &SupMorphism) -> Preorder {
        f.target.clone()
    }

    fn identity(&self, a: &Preorder) -> SupMorphism {
        SupMorphism {
            source: a.clone(),
            target: a.clone(),
            images: (0..a.len()).map(|x| a.principal(x)).collect(),
        }
    }

    fn compose(&self, g: &SupMorphism, f: &SupMorphism) -> Result<SupMorphism> {
        if f.target != g.source {
            return Err(Error::type_mismatch(format!(
                "cannot compose {:?} after {:?}",
                g.source, f.target
            )));
        }
        Ok(SupMorphism {
            source: f.source.clone(),
            target: g.target.clone(),
            images: f.images.iter().map(|s| g.apply(s)).collect(),
        })
    }

    fn tensor_obj(&self, a: &Preorder, b: &Preorder) -> Preorder {
        a.product(b)
    }

    fn tensor_mor(&self, f: &SupMorphism, g: &SupMorphism) -> Result<SupMorphism> {
        let (n, m) = (f.target.len(), g.target.len());
        let mut images = Vec::with_capacity(f.source.len() * g.source.len());
        for a in 0..f.source.len() {
            for b in 0..g.source.len() {
                let mut s = vec![false; n * m];
                for x in 0..n {
                    for y in 0..m {
                        s[x * m + y] = f.images[a][x] && g.images[b][y];
                    }
                }
                images.push(s);
            }
        }
        Ok(SupMorphism {
            source: f.source.product(&g.source),
            target: f.target.product(&g.target),
            images,
        })
    }

    fn unit(&self) -> Preorder {
        Preorder::discrete(1)
    }

    fn symmetry(&self, a: &Preorder, b: &Preorder) -> SupMorphism {
        let (n, m) = (a.len(), b.len());
        let source = a.product(b);
        let target = b.product(a);
        let images = (0..n * m)
            .map(|k| target.principal((k % m) * n + k / m))
            .collect();
        SupMorphism {
            source,
            target,
            images,
        }
    }

    fn mor_eq(&self, f: &SupMorphism, g: &SupMorphism) -> bool {
        f == g
    }

    fn render(&self, f: &SupMorphism) -> String {
        f.to_text()
    }
}

/// `D(P)` is dual to `D(P^op)`: `η(1) = ↓{(a, a)}` in `P × P^op`, and
/// `ε(↓(y, x)) = 1` iff `y ≤ x` in `P`.
pub fn downset_dual_pair(p: &Preorder) -> DualPair<Preorder, SupMorphism> {
    let n = p.len();
    let op = p.opposite();
    let pp = p.product(&op);
    let diag: Vec<bool> = (0..n * n).map(|k| k / n == k % n).collect();
    let eta = SupMorphism {
        source: Preorder::discrete(1),
        target: pp.clone(),
        images: vec![pp.down_closure(&diag)],
    };
    let eps = SupMorphism {
        source: op.product(p),
        target: Preorder::discrete(1),
        images: (0..n * n).map(|k| vec![p.leq(k / n, k % n)]).collect(),
    };
    DualPair::new(p.clone(), op, eta, eps)
}

/// The trace of `U -> f⁻¹(U)` for a monotone endomap `f`.
pub fn alexandrov_trace(p: &Preorder, f: &[usize]) -> Result<bool> {
    let c = SupCategory;
    let phi = SupMorphism::inverse_image(p, p, f)?;
    c.bit(&smc::trace(&c, &downset_dual_pair(p), &phi)?)
}

/// The twisted trace of `(U, V) -> f⁻¹(U ∩ V)`, a map `D(P) -> {0 ≤ 1}`,
/// returned as its values on every down-set (in [`Preorder::down_sets`] order).
pub fn alexandrov_twisted_trace(p: &Preorder, f: &[usize]) -> Result<Vec<(PointSet, bool)>> {
    let c = SupCategory;
    check_monotone(p, p, f)?;
    let n = p.len();
    let pp = p.product(p);
    // principal (u, v) goes to f⁻¹(↓u ∩ ↓v)
    let images = (0..n * n)
        .map(|k| {
            (0..n)
                .map(|x| p.leq(f[x], k / n) && p.leq(f[x], k % n))
                .collect()
        })
        .collect();
    let g = SupMorphism::new(pp, p.clone(), images)?;
    let one = Preorder::discrete(1);
    // Q ⊗ M -> M ⊗ I is Q ⊗ M -> M as objects are strict
    let t = smc::twisted_trace(&c, &downset_dual_pair(p), p, &one, &g)?;
    Ok(p.down_sets()
        .into_iter()
        .map(|u| {
            let v = t.apply(&u)[0];
            (u, v)
        })
        .collect())
}

/// The twisted trace of `m⁻¹: D(A) -> D(A × B)` for a monotone
/// `m: A × B -> A`: a down-set of `B`.
pub fn alexandrov_parametrized(a: &Preorder, b: &Preorder, m: &[usize]) -> Result<PointSet> {
    let c = SupCategory;
    let ab = a.product(b);
    let phi = SupMorphism::inverse_image(&ab, a, m)?;
    let t = smc::twisted_trace(&c, &downset_dual_pair(a), &c.unit(), b, &phi)?;
    Ok(t.images[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smc::verify_dual_pair;

    #[test]
    fn closure_is_reflexive_and_transitive() {
        let p = Preorder::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2) && p.leq(1, 1) && !p.leq(2, 0));
        assert!(Preorder::new(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn counts_preorders_up_to_iso() {
        let counts: Vec<usize> = (0..=4).map(|n| Preorder::all_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 9, 33]);
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(Preorder::discrete(2).down_sets().len(), 4);
        assert_eq!(Preorder::discrete(1).down_sets().len(), 2);
        assert_eq!(Preorder::sierpinski().down_sets().len(), 3);
    }

    #[test]
    fn pairs_verify_on_small_preorders() {
        for n in 0..=3 {
            for p in Preorder::all_up_to_iso(n) {
                assert!(
                    verify_dual_pair(&SupCategory, &downset_dual_pair(&p)).unwrap(),
                    "{p:?}"
                );
            }
        }
    }

    #[test]
    fn discrete_pair_is_the_power_set_pair() {
        let p = Preorder::discrete(3);
        let dp = downset_dual_pair(&p);
        let expected: Vec<bool> = (0..9).map(|k| k / 3 == k % 3).collect();
        assert_eq!(dp.coevaluation.images[0], expected);
    }

    #[test]
    fn rejects_non_monotone_maps() {
        let s = Preorder::sierpinski();
        assert!(alexandrov_trace(&s, &[1, 0]).is_err());
    }

    #[test]
    fn alexandrov_examples() {
        let s = Preorder::sierpinski();
        assert!(alexandrov_trace(&s, &[0, 1]).unwrap());
        assert!(alexandrov_trace(&s, &[1, 1]).unwrap());
        assert!(!alexandrov_trace(&Preorder::discrete(2), &[1, 0]).unwrap());
        assert!(!alexandrov_trace(&Preorder::discrete(0), &[]).unwrap());
    }

    #[test]
    fn twisted_identity_detects_nonempty_opens() {
        let p = Preorder::chain(3);
        for (u, v) in alexandrov_twisted_trace(&p, &[0, 1, 2]).unwrap() {
            assert_eq!(v, u.iter().any(|&x| x));
        }
    }

    #[test]
    fn twisted_trace_on_sierpinski() {
        let s = Preorder::sierpinski();
        let values: Vec<(Vec<bool>, bool)> = alexandrov_twisted_trace(&s, &[1, 1]).unwrap();
        let expected = vec![
            (vec![false, false], false),
            (vec![true, false], false),
            (vec![true, true], true),
        ];
        assert_eq!(values, expected);
        // read in the opposite order, opens are up-sets: U holds a point below its image
        let op = s.opposite();
        for (u, v) in alexandrov_twisted_trace(&op, &[1, 1]).unwrap() {
            let literal = (0..2).any(|x| u[x] && s.leq(x, 1));
            assert_eq!(v, literal, "{u:?}");
        }
    }

    #[test]
    fn parametrized_projection() {
        // m(a, b) = a0 for every b: all of B iff some point lies over a0's image
        let a = Preorder::chain(3);
        let b = Preorder::discrete(2);
        for a0 in 0..3 {
            let m = vec![a0; 6];
            assert_eq!(
                alexandrov_parametrized(&a, &b, &m).unwrap(),
                vec![true, true]
            );
        }
        let empty = Preorder::discrete(0);
        assert_eq!(
            alexandrov_parametrized(&empty, &b, &[]).unwrap(),
            vec![false, false]
        );
    }
}
