//! Sources of choices for generators: seeded sampling, or exhaustive
//! enumeration of every choice sequence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub trait Chooser {
    /// A value in `0..bound`; `bound` must be positive.
    fn pick(&mut self, bound: usize) -> usize;

    /// A value in `lo..=hi`.
    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.pick((hi - lo + 1) as usize) as i64
    }

    fn flip(&mut self) -> bool {
        self.pick(2) == 1
    }
}

/// Uniform choices from a ChaCha stream keyed by `(seed, stream)`.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }
}

impl Chooser for Sampler {
    fn pick(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "empty choice");
        self.rng.gen_range(0..bound)
    }
}

/// Walks every choice sequence in depth-first order.
///
/// Run the generator once per path, calling [`Odometer::advance`] after each
/// run; the generator's choices must depend only on earlier choices.
#[derive(Debug, Clone, Default)]
pub struct Odometer {
    digits: Vec<(usize, usize)>,
    pos: usize,
    done: bool,
}

impl Odometer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Move to the next path; false once every path has been visited.
    pub fn advance(&mut self) -> bool {
        self.digits.truncate(self.pos);
        self.pos = 0;
        while let Some((value, bound)) = self.digits.pop() {
            if value + 1 < bound {
                self.digits.push((value + 1, bound));
                return true;
            }
        }
        self.done = true;
        false
    }

    pub fn is_done(&self) -> bool {
        self.done
    }
}

impl Chooser for Odometer {
    fn pick(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "empty choice");
        let v = match self.digits.get(self.pos) {
            Some(&(v, b)) if b == bound => v,
            Some(_) => {
                // a different shape of path from here on
                self.digits.truncate(self.pos);
                self.digits.push((0, bound));
                0
            }
            None => {
                self.digits.push((0, bound));
                0
            }
        };
        self.pos += 1;
        v
    }
}
