//! Finite simplicial complexes, simplicial maps and their chain-level images.
//!
//! Vertices are numbered in order of first appearance. A simplex is stored
//! as its sorted tuple of vertex numbers, which fixes its orientation.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, RingTag};

use super::chain::{chain_dual_pair, lefschetz_number, ChainCategory, ChainComplex, ChainMap};
use super::homology::{induced_map, HomologyBasis};

/// Largest supported simplex dimension.
pub const MAX_DIMENSION: usize = 7;

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    /// `simplices[n]` lists the `n`-simplices in lexicographic order.
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Close the given simplices (tuples of vertex numbers) under faces.
    pub fn new(vertices: Vec<String>, generators: &[Vec<usize>]) -> Result<Self> {
        let distinct: BTreeSet<&String> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::InvalidSimplicial("repeated vertex name".into()));
        }
        let mut all: BTreeSet<Vec<usize>> = (0..vertices.len()).map(|v| vec![v]).collect();
        for g in generators {
            let mut s = g.clone();
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                return Err(Error::InvalidSimplicial("empty simplex".into()));
            }
            if s.len() > MAX_DIMENSION + 1 {
                return Err(Error::InvalidSimplicial(format!(
                    "simplex of dimension {} exceeds {MAX_DIMENSION}",
                    s.len() - 1
                )));
            }
            if let Some(&v) = s.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::InvalidSimplicial(format!("unknown vertex {v}")));
            }
            // all nonempty subsets
            let k = s.len();
            for mask in 1u32..(1 << k) {
                let face: Vec<usize> = (0..k)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| s[i])
                    .collect();
                all.insert(face);
            }
        }
        let dim = all.iter().map(Vec::len).max().unwrap_or(0);
        let mut simplices = vec![Vec::new(); dim];
        for s in all {
            simplices[s.len() - 1].push(s);
        }
        Ok(SimplicialComplex {
            vertices,
            simplices,
        })
    }

    /// Parse the `.scx` format: `vertex <id>` and `simplex <id> ...` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut generators = Vec::new();
        let mut intern = |name: &str, vertices: &mut Vec<String>| -> usize {
            *index.entry(name.to_string()).or_insert_with(|| {
                vertices.push(name.to_string());
                vertices.len() - 1
            })
        };
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            match words.next() {
                Some("vertex") => {
                    let ids: Vec<&str> = words.collect();
                    if ids.len() != 1 {
                        return Err(Error::parse(lineno, "`vertex` takes one identifier"));
                    }
                    intern(ids[0], &mut vertices);
                }
                Some("simplex") => {
                    let ids: Vec<usize> = words.map(|w| intern(w, &mut vertices)).collect();
                    if ids.is_empty() {
                        return Err(Error::parse(lineno, "`simplex` needs at least one vertex"));
                    }
                    let distinct: BTreeSet<_> = ids.iter().collect();
                    if distinct.len() != ids.len() {
                        return Err(Error::parse(lineno, "repeated vertex in simplex"));
                    }
                    generators.push(ids);
                }
                Some(other) => {
                    return Err(Error::parse(lineno, format!("unknown keyword `{other}`")));
                }
                None => {}
            }
        }
        Self::new(vertices, &generators)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Highest dimension of a simplex, `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, n: usize) -> &[Vec<usize>] {
        self.simplices.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, n: usize) -> usize {
        self.simplices(n).len()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        simplex
            .len()
            .checked_sub(1)
            .is_some_and(|n| self.simplices(n).binary_search(&simplex.to_vec()).is_ok())
    }

    fn position(&self, simplex: &[usize]) -> Option<usize> {
        self.simplices(simplex.len().checked_sub(1)?)
            .binary_search(&simplex.to_vec())
            .ok()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<usize> = self.simplices.iter().map(Vec::len).collect();
        write!(
            f,
            "SimplicialComplex({} vertices, f-vector {counts:?})",
            self.vertices.len()
        )
    }
}

/// Oriented simplicial chains: `d[v_0..v_n] = Σ (-1)^i [.. v̂_i ..]`.
pub fn simplicial_chain_complex(k: &SimplicialComplex, ring: RingTag) -> Result<ChainComplex> {
    let ranks: Vec<usize> = k.simplices.iter().map(Vec::len).collect();
    let mut diffs = Vec::new();
    for n in 1..ranks.len() {
        let mut d = ExactMatrix::zeros(ring, ranks[n - 1], ranks[n]);
        for (j, s) in k.simplices(n).iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let row = k.position(&face).expect("faces are closed");
                d.set_reduced(row, j, ring.from_i64(if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        diffs.push(d);
    }
    ChainComplex::new(ring, 0, ranks, diffs)
}

/// A vertex map carrying simplices to simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    vertex_map: Vec<usize>,
}

impl SimplicialMap {
    pub fn new(
        source: SimplicialComplex,
        target: SimplicialComplex,
        vertex_map: Vec<usize>,
    ) -> Result<Self> {
        if vertex_map.len() != source.vertices.len() {
            return Err(Error::InvalidSimplicial(format!(
                "map gives {} images for {} vertices",
                vertex_map.len(),
                source.vertices.len()
            )));
        }
        if let Some(&v) = vertex_map.iter().find(|&&v| v >= target.vertices.len()) {
            return Err(Error::InvalidSimplicial(format!(
                "image {v} is not a vertex"
            )));
        }
        for s in source.simplices.iter().flatten() {
            let image: BTreeSet<usize> = s.iter().map(|&v| vertex_map[v]).collect();
            let image: Vec<usize> = image.into_iter().collect();
            if !target.contains(&image) {
                let names: Vec<&str> = s.iter().map(|&v| source.vertices[v].as_str()).collect();
                return Err(Error::InvalidSimplicial(format!(
                    "image of simplex {{{}}} is not a simplex",
                    names.join(" ")
                )));
            }
        }
        Ok(SimplicialMap {
            source,
            target,
            vertex_map,
        })
    }

    /// Parse `.smap` lines `<source id> <target id>`.
    pub fn parse(
        text: &str,
        source: &SimplicialComplex,
        target: &SimplicialComplex,
    ) -> Result<Self> {
        let mut images: Vec<Option<usize>> = vec![None; source.vertices.len()];
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let [a, b] = words[..] else {
                return Err(Error::parse(lineno, "expected `<id> <id>`"));
            };
            let a = source
                .vertex_index(a)
                .ok_or_else(|| Error::parse(lineno, format!("unknown source vertex `{a}`")))?;
            let b = target
                .vertex_index(b)
                .ok_or_else(|| Error::parse(lineno, format!("unknown target vertex `{b}`")))?;
            if images[a].replace(b).is_some_and(|old| old != b) {
                return Err(Error::parse(lineno, "vertex mapped twice"));
            }
        }
        let map = images
            .iter()
            .enumerate()
            .map(|(v, x)| {
                x.ok_or_else(|| {
                    Error::InvalidSimplicial(format!(
                        "no image for vertex `{}`",
                        source.vertices[v]
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source.clone(), target.clone(), map)
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// `self ∘ first`
    pub fn after(&self, first: &SimplicialMap) -> Result<SimplicialMap> {
        if first.target != self.source {
            return Err(Error::type_mismatch("simplicial maps do not compose"));
        }
        let map = first
            .vertex_map
            .iter()
            .map(|&v| self.vertex_map[v])
            .collect();
        SimplicialMap::new(first.source.clone(), self.target.clone(), map)
    }

    /// Names of the vertices `v` with `φ(v) = v` (for endomorphisms).
    pub fn fixed_vertices(&self) -> Vec<&str> {
        if self.source != self.target {
            return Vec::new();
        }
        (0..self.vertex_map.len())
            .filter(|&v| self.vertex_map[v] == v)
            .map(|v| self.source.vertices[v].as_str())
            .collect()
    }
}

/// Collapsed simplices go to 0; others to the sorted image with the sign of
/// the sorting permutation.
pub fn induced_chain_map(phi: &SimplicialMap, ring: RingTag) -> Result<ChainMap> {
    let src = simplicial_chain_complex(&phi.source, ring)?;
    let tgt = simplicial_chain_complex(&phi.target, ring)?;
    let mut comps = BTreeMap::new();
    for n in 0..phi.source.simplices.len() {
        let mut m = ExactMatrix::zeros(ring, phi.target.count(n), phi.source.count(n));
        if m.rows() == 0 {
            continue;
        }
        for (j, s) in phi.source.simplices(n).iter().enumerate() {
            let image: Vec<usize> = s.iter().map(|&v| phi.vertex_map[v]).collect();
            let distinct: BTreeSet<usize> = image.iter().copied().collect();
            if distinct.len() < image.len() {
                continue;
            }
            let inversions = (0..image.len())
                .flat_map(|a| (a + 1..image.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| image[a] > image[b])
                .count();
            let sorted: Vec<usize> = distinct.into_iter().collect();
            let row = phi.target.position(&sorted).expect("validated simplicial");
            m.set_reduced(
                row,
                j,
                ring.from_i64(if inversions % 2 == 0 { 1 } else { -1 }),
            );
        }
        comps.insert(n as i32, m);
    }
    ChainMap::between(&src, &tgt, comps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    FixedPointGuaranteed,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::FixedPointGuaranteed => "FIXED_POINT_GUARANTEED",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

fn require_endomorphism(phi: &SimplicialMap) -> Result<()> {
    if phi.source != phi.target {
        return Err(Error::type_mismatch("map is not a self-map"));
    }
    Ok(())
}

/// Lefschetz number over `ring` through the generic trace on chains.
pub fn lefschetz_over(phi: &SimplicialMap, ring: RingTag) -> Result<crate::exactalg::Scalar> {
    require_endomorphism(phi)?;
    let f = induced_chain_map(phi, ring)?;
    let c = ChainCategory::new(ring);
    let dp = chain_dual_pair(f.source().complex())?;
    lefschetz_number(&c, &dp, &f)
}

/// Rational Lefschetz number and the fixed-point verdict.
pub fn lefschetz_verdict(phi: &SimplicialMap) -> Result<(i64, Verdict)> {
    let l = lefschetz_over(phi, RingTag::Rationals)?;
    let l = l
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::InvalidEntry("Lefschetz number out of range".into()))?;
    let verdict = if l != 0 {
        Verdict::FixedPointGuaranteed
    } else {
        Verdict::Inconclusive
    };
    Ok((l, verdict))
}

/// `Σ (-1)^n tr H_n(φ)` on integral homology modulo torsion.
pub fn torsion_free_lefschetz(phi: &SimplicialMap) -> Result<i64> {
    require_endomorphism(phi)?;
    let f = induced_chain_map(phi, RingTag::Integers)?;
    let basis = HomologyBasis::mod_torsion(f.source().complex())?;
    let maps = induced_map(&basis, &basis, &f)?;
    let mut total = 0i64;
    for (n, m) in maps {
        let t = m.trace()?;
        let t = t.to_integer().to_i64().unwrap_or(0);
        total += if n % 2 == 0 { t } else { -t };
    }
    Ok(total)
}

/// Lefschetz number over `Z/p`, as a residue in `[0, p)`.
pub fn lefschetz_mod(phi: &SimplicialMap, p: u64) -> Result<u64> {
    let l = lefschetz_over(phi, RingTag::integers_mod(p)?)?;
    Ok(l.to_integer().to_u64().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CIRCLE: &str = "vertex a\nvertex b\nvertex c\nsimplex a b\nsimplex b c\nsimplex a c\n";

    fn circle() -> SimplicialComplex {
        SimplicialComplex::parse(CIRCLE).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        let mut text = String::new();
        for x in ["x+", "x-"] {
            for y in ["y+", "y-"] {
                for z in ["z+", "z-"] {
                    text.push_str(&format!("simplex {x} {y} {z}\n"));
                }
            }
        }
        SimplicialComplex::parse(&text).unwrap()
    }

    fn map(k: &SimplicialComplex, pairs: &str) -> SimplicialMap {
        SimplicialMap::parse(pairs, k, k).unwrap()
    }

    #[test]
    fn single_vertex() {
        let k = SimplicialComplex::parse("vertex v\n").unwrap();
        let c = simplicial_chain_complex(&k, RingTag::Integers).unwrap();
        assert_eq!(
            c,
            ChainComplex::concentrated(RingTag::Integers, 0, 1).unwrap()
        );
    }

    #[test]
    fn circle_incidence() {
        let c = simplicial_chain_complex(&circle(), RingTag::Integers).unwrap();
        assert_eq!((c.rank(0), c.rank(1)), (3, 3));
        // edges ab, ac, bc
        let d1 =
            ExactMatrix::from_i64_rows(RingTag::Integers, &[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]])
                .unwrap();
        assert_eq!(c.differential(1), d1);
    }

    #[test]
    fn octahedron_counts() {
        let k = octahedron();
        assert_eq!((k.count(0), k.count(1), k.count(2)), (6, 12, 8));
        let c = simplicial_chain_complex(&k, RingTag::Rationals).unwrap();
        assert_eq!(c.euler_characteristic(), 2);
    }

    #[test]
    fn faces_are_closed_and_comments_ignored() {
        let k = SimplicialComplex::parse("# a tetrahedron\nsimplex 1 2 3 4 # solid\n").unwrap();
        assert_eq!(
            (k.count(0), k.count(1), k.count(2), k.count(3)),
            (4, 6, 4, 1)
        );
        assert!(SimplicialComplex::parse("simplex a a\n").is_err());
        assert!(SimplicialComplex::parse("face a\n").is_err());
    }

    #[test]
    fn non_simplicial_maps_are_rejected() {
        let k = SimplicialComplex::parse("simplex a b\nvertex c\n").unwrap();
        assert!(SimplicialMap::parse("a a\nb c\nc c\n", &k, &k).is_err());
        assert!(SimplicialMap::parse("a a\n", &k, &k).is_err());
        assert!(SimplicialMap::parse("a z\nb b\nc c\n", &k, &k).is_err());
    }

    #[test]
    fn rotation_is_a_signed_permutation() {
        let k = circle();
        let f = induced_chain_map(&map(&k, "a b\nb c\nc a\n"), RingTag::Integers).unwrap();
        // ab -> bc, ac -> ba = -ab, bc -> ca = -ac
        let f1 =
            ExactMatrix::from_i64_rows(RingTag::Integers, &[&[0, -1, 0], &[0, 0, -1], &[1, 0, 0]])
                .unwrap();
        assert_eq!(f.component(1), f1);
    }

    #[test]
    fn constant_map_kills_positive_degrees() {
        let k = octahedron();
        let pairs: String = k.vertices().iter().map(|v| format!("{v} x+\n")).collect();
        let f = induced_chain_map(&map(&k, &pairs), RingTag::Rationals).unwrap();
        assert!(f.component(1).is_zero() && f.component(2).is_zero());
        assert_eq!(lefschetz_verdict(&map(&k, &pairs)).unwrap().0, 1);
    }

    #[test]
    fn verdicts() {
        let k = circle();
        assert_eq!(
            lefschetz_verdict(&map(&k, "a a\nb b\nc c\n")).unwrap(),
            (0, Verdict::Inconclusive)
        );
        assert_eq!(
            lefschetz_verdict(&map(&k, "a b\nb c\nc a\n")).unwrap(),
            (0, Verdict::Inconclusive)
        );
        let refl = map(&k, "a b\nb a\nc c\n");
        assert_eq!(
            lefschetz_verdict(&refl).unwrap(),
            (2, Verdict::FixedPointGuaranteed)
        );
        assert_eq!(refl.fixed_vertices(), vec!["c"]);
        assert_eq!(torsion_free_lefschetz(&refl).unwrap(), 2);
    }

    #[test]
    fn induced_maps_compose() {
        let k = circle();
        let rot = map(&k, "a b\nb c\nc a\n");
        let refl = map(&k, "a b\nb a\nc c\n");
        let both = refl.after(&rot).unwrap();
        let c = ChainCategory::new(RingTag::Integers);
        use crate::smc::SymmetricMonoidalCategory;
        let lhs = induced_chain_map(&both, RingTag::Integers).unwrap();
        let rhs = c
            .compose(
                &induced_chain_map(&refl, RingTag::Integers).unwrap(),
                &induced_chain_map(&rot, RingTag::Integers).unwrap(),
            )
            .unwrap();
        assert!(c.mor_eq(&lhs, &rhs));
    }
}
