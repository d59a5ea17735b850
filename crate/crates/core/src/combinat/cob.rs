//! Unoriented 1-dimensional cobordisms: a perfect matching on the boundary
//! points plus a number of closed circles.
//!
//! Endpoints of a cobordism `a -> b` are numbered inputs first (`0..a`), then
//! outputs (`a..a+b`).

use std::fmt;

use crate::error::{Error, Result};
use crate::smc::{self, DualPair, SymmetricMonoidalCategory};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cobordism1 {
    inputs: usize,
    outputs: usize,
    partner: Vec<usize>,
    circles: usize,
}

impl Cobordism1 {
    pub fn new(inputs: usize, outputs: usize, partner: Vec<usize>, circles: usize) -> Result<Self> {
        let n = inputs + outputs;
        if partner.len() != n {
            return Err(Error::InvalidCobordism(format!(
                "{} partners for {n} endpoints",
                partner.len()
            )));
        }
        for (x, &y) in partner.iter().enumerate() {
            if y >= n || y == x || partner[y] != x {
                return Err(Error::InvalidCobordism(format!(
                    "endpoint {x} is not matched to a distinct endpoint that points back"
                )));
            }
        }
        Ok(Cobordism1 {
            inputs,
            outputs,
            partner,
            circles,
        })
    }

    /// Build from a list of matched endpoint pairs.
    pub fn from_pairs(
        inputs: usize,
        outputs: usize,
        pairs: &[(usize, usize)],
        circles: usize,
    ) -> Result<Self> {
        let n = inputs + outputs;
        let mut partner = vec![usize::MAX; n];
        for &(x, y) in pairs {
            if x >= n || y >= n || partner[x] != usize::MAX || partner[y] != usize::MAX {
                return Err(Error::InvalidCobordism(format!("bad pair ({x}, {y})")));
            }
            partner[x] = y;
            partner[y] = x;
        }
        Self::new(inputs, outputs, partner, circles)
    }

    /// Input `i` runs straight to output `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let pairs: Vec<(usize, usize)> =
            perm.iter().enumerate().map(|(i, &p)| (i, n + p)).collect();
        Self::from_pairs(n, n, &pairs, 0)
    }

    /// The closed cobordism made of `k` circles.
    pub fn circles_only(k: usize) -> Self {
        Cobordism1 {
            inputs: 0,
            outputs: 0,
            partner: Vec::new(),
            circles: k,
        }
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn partner(&self, endpoint: usize) -> usize {
        self.partner[endpoint]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn circles(&self) -> usize {
        self.circles
    }

    /// Matched pairs `(x, y)` with `x < y`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&x| x < self.partner[x])
            .map(|x| (x, self.partner[x]))
            .collect()
    }

    pub fn with_circles(&self, circles: usize) -> Self {
        Cobordism1 {
            circles,
            ..self.clone()
        }
    }

    /// Every matching `a -> b` with no circles.
    pub fn all_matchings(inputs: usize, outputs: usize) -> Vec<Cobordism1> {
        let n = inputs + outputs;
        if n % 2 == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut partner = vec![usize::MAX; n];
        fn go(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let Some(x) = partner.iter().position(|&p| p == usize::MAX) else {
                out.push(partner.clone());
                return;
            };
            for y in x + 1..partner.len() {
                if partner[y] == usize::MAX {
                    partner[x] = y;
                    partner[y] = x;
                    go(partner, out);
                    partner[x] = usize::MAX;
                    partner[y] = usize::MAX;
                }
            }
        }
        let mut raw = Vec::new();
        go(&mut partner, &mut raw);
        for p in raw {
            out.push(Cobordism1 {
                inputs,
                outputs,
                partner: p,
                circles: 0,
            });
        }
        out
    }

    fn label(&self, x: usize) -> String {
        if x < self.inputs {
            format!("i{x}")
        } else {
            format!("o{}", x - self.inputs)
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("inputs {}\noutputs {}\n", self.inputs, self.outputs);
        for (x, y) in self.pairs() {
            out.push_str(&format!("pair {} {}\n", self.label(x), self.label(y)));
        }
        out.push_str(&format!("circles {}\n", self.circles));
        out
    }

    /// Inverse of [`Cobordism1::to_text`].
    pub fn parse(text: &str) -> Result<Self> {
        let (mut inputs, mut outputs, mut circles) = (None, None, 0);
        let mut raw_pairs = Vec::new();
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
                ["inputs", n] => inputs = Some(num(n)?),
                ["outputs", n] => outputs = Some(num(n)?),
                ["circles", n] => circles = num(n)?,
                ["pair", x, y] => raw_pairs.push((lineno, x.to_string(), y.to_string())),
                _ => return Err(Error::parse(lineno, format!("unexpected line `{line}`"))),
            }
        }
        let a = inputs.ok_or_else(|| Error::parse(1, "missing `inputs`"))?;
        let b = outputs.ok_or_else(|| Error::parse(1, "missing `outputs`"))?;
        let endpoint = |lineno: usize, t: &str| -> Result<usize> {
            let bad = || Error::parse(lineno, format!("bad endpoint `{t}`"));
            let (side, k) = t.split_at(1.min(t.len()));
            let k: usize = k.parse().map_err(|_| bad())?;
            match side {
                "i" if k < a => Ok(k),
                "o" if k < b => Ok(a + k),
                _ => Err(bad()),
            }
        };
        let mut pairs = Vec::new();
        for (lineno, x, y) in raw_pairs {
            pairs.push((endpoint(lineno, &x)?, endpoint(lineno, &y)?));
        }
        Self::from_pairs(a, b, &pairs, circles).map_err(|e| Error::parse(0, e.to_string()))
    }
}

impl fmt::Debug for Cobordism1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(x, y)| format!("{}-{}", self.label(x), self.label(y)))
            .collect();
        write!(
            f,
            "Cob({}->{}, [{}], {} circles)",
            self.inputs,
            self.outputs,
            pairs.join(" "),
            self.circles
        )
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CobCategory;

impl CobCategory {
    /// A closed cobordism as its number of circles.
    pub fn circle_count(&self, f: &Cobordism1) -> Result<usize> {
        if f.inputs != 0 || f.outputs != 0 {
            return Err(Error::type_mismatch("not a closed cobordism"));
        }
        Ok(f.circles)
    }

    /// `η_n: 0 -> n + n`, output `i` joined to output `n + i`.
    pub fn coevaluation(&self, n: usize) -> Cobordism1 {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, n + i)).collect();
        Cobordism1::from_pairs(0, 2 * n, &pairs, 0).expect("valid matching")
    }

    /// `ε_n: n + n -> 0`, input `i` joined to input `n + i`.
    pub fn evaluation(&self, n: usize) -> Cobordism1 {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, n + i)).collect();
        Cobordism1::from_pairs(2 * n, 0, &pairs, 0).expect("valid matching")
    }
}

impl SymmetricMonoidalCategory for CobCategory {
    type Object = usize;
    type Morphism = Cobordism1;

    fn domain(&self, f: &Cobordism1) -> usize {
        f.inputs
    }

    fn codomain(&self, f: &Cobordism1) -> usize {
        f.outputs
    }

    fn identity(&self, a: &usize) -> Cobordism1 {
        Cobordism1::permutation(&(0..*a).collect::<Vec<_>>()).expect("identity matching")
    }

    fn compose(&self, g: &Cobordism1, f: &Cobordism1) -> Result<Cobordism1> {
        if f.outputs != g.inputs {
            return Err(Error::type_mismatch(format!(
                "cannot glue {} outputs to {} inputs",
                f.outputs, g.inputs
            )));
        }
        let (a, b, c) = (f.inputs, f.outputs, g.outputs);
        // nodes: f's inputs 0..a, the glued middle a..a+b, g's outputs after
        let f_edge = |x: usize| f.partner[x];
        let g_edge = |x: usize| {
            let local = g.partner[x - a];
            local + a
        };
        let is_middle = |x: usize| (a..a + b).contains(&x);
        let total = a + b + c;
        let mut partner = vec![usize::MAX; a + c];
        let mut visited = vec![false; total];
        let outer = |x: usize| if x < a { x } else { x - b };
        for start in (0..a).chain(a + b..total) {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut x = start;
            let mut use_f = start < a;
            loop {
                x = if use_f { f_edge(x) } else { g_edge(x) };
                visited[x] = true;
                if !is_middle(x) {
                    break;
                }
                use_f = !use_f;
            }
            partner[outer(start)] = outer(x);
            partner[outer(x)] = outer(start);
        }
        let mut circles = f.circles + g.circles;
        for start in a..a + b {
            if visited[start] {
                continue;
            }
            circles += 1;
            let mut x = start;
            loop {
                x = f_edge(x);
                visited[x] = true;
                x = g_edge(x);
                visited[x] = true;
                if x == start {
                    break;
                }
            }
        }
        Ok(Cobordism1 {
            inputs: a,
            outputs: c,
            partner,
            circles,
        })
    }

    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a + b
    }

    fn tensor_mor(&self, f: &Cobordism1, g: &Cobordism1) -> Result<Cobordism1> {
        let (a, b, c, d) = (f.inputs, f.outputs, g.inputs, g.outputs);
        let relabel_f = |x: usize| if x < a { x } else { a + c + (x - a) };
        let relabel_g = |x: usize| if x < c { a + x } else { a + c + b + (x - c) };
        let mut partner = vec![0; a + b + c + d];
        for x in 0..a + b {
            partner[relabel_f(x)] = relabel_f(f.partner[x]);
        }
        for x in 0..c + d {
            partner[relabel_g(x)] = relabel_g(g.partner[x]);
        }
        Ok(Cobordism1 {
            inputs: a + c,
            outputs: b + d,
            partner,
            circles: f.circles + g.circles,
        })
    }

    fn unit(&self) -> usize {
        0
    }

    fn symmetry(&self, a: &usize, b: &usize) -> Cobordism1 {
        let perm: Vec<usize> = (0..a + b)
            .map(|i| if i < *a { b + i } else { i - a })
            .collect();
        Cobordism1::permutation(&perm).expect("a permutation")
    }

    fn mor_eq(&self, f: &Cobordism1, g: &Cobordism1) -> bool {
        f == g
    }

    fn render(&self, f: &Cobordism1) -> String {
        f.to_text()
    }
}

/// `n` points are self-dual; `η` and `ε` are both the cylinder on `n` points.
pub fn cob1_dual_pair(n: usize) -> DualPair<usize, Cobordism1> {
    let c = CobCategory;
    DualPair::new(n, n, c.coevaluation(n), c.evaluation(n))
}

/// Number of circles in the closure of an endomorphism.
pub fn cob1_trace(f: &Cobordism1) -> Result<usize> {
    let c = CobCategory;
    if f.inputs != f.outputs {
        return Err(Error::NotSquare {
            rows: f.outputs,
            cols: f.inputs,
        });
    }
    c.circle_count(&smc::trace(&c, &cob1_dual_pair(f.inputs), f)?)
}

/// Parse and evaluate a cobordism program.
///
/// Each line (or `;`-separated stage) is a tensor product of words joined by
/// `|`, composed after the previous stage. Words: `idN`, `cup`/`cupN`,
/// `cap`/`capN`, `swap`, `perm p0 p1 ...`, `circle`, and `trace`, which
/// closes the composite so far and must stand alone.
pub fn run_program(text: &str) -> Result<Cobordism1> {
    let c = CobCategory;
    let mut current: Option<Cobordism1> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("");
        for stage in line.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let next = if stage == "trace" {
                let f = current
                    .take()
                    .ok_or_else(|| Error::parse(lineno, "`trace` needs a cobordism before it"))?;
                let k = cob1_trace(&f).map_err(|e| Error::parse(lineno, e.to_string()))?;
                Cobordism1::circles_only(k)
            } else {
                let mut stage_mor = c.identity(&0);
                for term in stage.split('|') {
                    let w = parse_word(lineno, term.trim())?;
                    stage_mor = c.tensor_mor(&stage_mor, &w)?;
                }
                match current.take() {
                    None => stage_mor,
                    Some(f) => c
                        .compose(&stage_mor, &f)
                        .map_err(|e| Error::parse(lineno, e.to_string()))?,
                }
            };
            current = Some(next);
        }
    }
    current.ok_or_else(|| Error::parse(1, "empty program"))
}

fn parse_word(lineno: usize, word: &str) -> Result<Cobordism1> {
    let c = CobCategory;
    let tokens: Vec<&str> = word.split_whitespace().collect();
    let bad = || Error::parse(lineno, format!("unknown word `{word}`"));
    let sized = |head: &str, default: Option<usize>| -> Option<Result<usize>> {
        let rest = tokens[0].strip_prefix(head)?;
        if rest.is_empty() {
            return Some(default.ok_or_else(bad));
        }
        Some(rest.parse().map_err(|_| bad()))
    };
    match tokens.first() {
        None => Err(Error::parse(lineno, "empty word")),
        Some(&"perm") => {
            let perm: Vec<usize> = tokens[1..]
                .iter()
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            Cobordism1::permutation(&perm)
                .map_err(|_| Error::parse(lineno, format!("`{word}` is not a permutation")))
        }
        Some(_) if tokens.len() > 1 => Err(bad()),
        Some(&"swap") => Ok(c.symmetry(&1, &1)),
        Some(&"circle") => Ok(Cobordism1::circles_only(1)),
        Some(_) => {
            if let Some(n) = sized("id", None) {
                Ok(c.identity(&n?))
            } else if let Some(n) = sized("cup", Some(1)) {
                Ok(c.coevaluation(n?))
            } else if let Some(n) = sized("cap", Some(1)) {
                Ok(c.evaluation(n?))
            } else {
                Err(bad())
            }
        }
    }
}
