//! Finite sets `{0, ..., n-1}` and functions, with the cartesian product
//! ordered lexicographically: `(a, b) -> a·|B| + b`.

use std::fmt;

use crate::error::{Error, Result};
use crate::smc::SymmetricMonoidalCategory;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Function {
    images: Vec<usize>,
    target: usize,
}

impl Function {
    pub fn new(images: Vec<usize>, target: usize) -> Result<Self> {
        if let Some(&x) = images.iter().find(|&&x| x >= target) {
            return Err(Error::InvalidEntry(format!(
                "image {x} outside a set of size {target}"
            )));
        }
        Ok(Function { images, target })
    }

    /// An endofunction of `{0, ..., images.len()-1}`.
    pub fn endo(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        Self::new(images, n)
    }

    pub fn identity(n: usize) -> Self {
        Function {
            images: (0..n).collect(),
            target: n,
        }
    }

    /// `x -> (x, x)`
    pub fn diagonal(n: usize) -> Self {
        Function {
            images: (0..n).map(|x| x * n + x).collect(),
            target: n * n,
        }
    }

    /// Parse `n` followed by `n` images.
    pub fn parse_endo(text: &str) -> Result<Self> {
        let mut tokens = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
            .flat_map(|(i, l)| l.split_whitespace().map(move |t| (i, t)));
        let (line, n) = tokens
            .next()
            .ok_or_else(|| Error::parse(1, "missing size"))?;
        let n: usize = n
            .parse()
            .map_err(|_| Error::parse(line, format!("bad size `{n}`")))?;
        let mut images = Vec::with_capacity(n);
        for (line, t) in tokens {
            let x: usize = t
                .parse()
                .map_err(|_| Error::parse(line, format!("bad image `{t}`")))?;
            if x >= n {
                return Err(Error::parse(line, format!("image {x} outside 0..{n}")));
            }
            images.push(x);
        }
        if images.len() != n {
            return Err(Error::parse(
                1,
                format!("expected {n} images, found {}", images.len()),
            ));
        }
        Ok(Function { images, target: n })
    }

    pub fn source(&self) -> usize {
        self.images.len()
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_endo(&self) -> bool {
        self.source() == self.target
    }

    /// Points with `f(x) = x`.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.source())
            .filter(|&x| self.images[x] == x)
            .collect()
    }

    /// Every function `[n] -> [n]`, images read as base-`n` digits.
    pub fn all_endos(n: usize) -> impl Iterator<Item = Function> {
        let count = (n as u32).checked_pow(n as u32).unwrap_or(0).max(1) as usize;
        (0..count).map(move |mut k| {
            let mut images = vec![0; n];
            for x in (0..n).rev() {
                images[x] = k % n;
                k /= n;
            }
            Function { images, target: n }
        })
    }
}

impl fmt::Debug for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}->{}", self.images, self.target)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FinSetCategory;

impl SymmetricMonoidalCategory for FinSetCategory {
    type Object = usize;
    type Morphism = Function;

    fn domain(&self, f: &Function) -> usize {
        f.source()
    }

    fn codomain(&self, f: &Function) -> usize {
        f.target
    }

    fn identity(&self, a: &usize) -> Function {
        Function::identity(*a)
    }

    fn compose(&self, g: &Function, f: &Function) -> Result<Function> {
        if f.target != g.source() {
            return Err(Error::type_mismatch(format!(
                "cannot compose {} -> _ after _ -> {}",
                g.source(),
                f.target
            )));
        }
        Ok(Function {
            images: f.images.iter().map(|&x| g.images[x]).collect(),
            target: g.target,
        })
    }

    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a * b
    }

    fn tensor_mor(&self, f: &Function, g: &Function) -> Result<Function> {
        let mut images = Vec::with_capacity(f.source() * g.source());
        for &x in &f.images {
            for &y in &g.images {
                images.push(x * g.target + y);
            }
        }
        Ok(Function {
            images,
            target: f.target * g.target,
        })
    }

    fn unit(&self) -> usize {
        1
    }

    fn symmetry(&self, a: &usize, b: &usize) -> Function {
        Function {
            images: crate::linear::mat::swap_permutation(*a, *b),
            target: a * b,
        }
    }

    fn mor_eq(&self, f: &Function, g: &Function) -> bool {
        f == g
    }
}
