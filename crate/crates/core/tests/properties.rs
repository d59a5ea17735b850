use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use dualtrace::combinat::{CobCategory, Cobordism1, RelCategory, Relation};
use dualtrace::exactalg::{ExactMatrix, RingTag};
use dualtrace::laws::{check_cyclicity, check_yanking};
use dualtrace::linear::{mat_dual_pair, MatCategory};
use dualtrace::smc::{conjugate_dual_pair, trace, verify_dual_pair, SymmetricMonoidalCategory};

fn matrix(ring: RingTag, rows: usize, cols: usize, entries: &[i64]) -> ExactMatrix {
    let e = entries.iter().map(|&x| ring.from_i64(x)).collect();
    ExactMatrix::new(ring, rows, cols, e).unwrap()
}

fn entries(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, n)
}

/// Two conformable matrices `a: m x n`, `b: n x m`.
fn conformable() -> impl Strategy<Value = (usize, usize, Vec<i64>, Vec<i64>)> {
    (0usize..=3, 0usize..=3)
        .prop_flat_map(|(m, n)| (Just(m), Just(n), entries(m * n), entries(n * m)))
}

fn diagonal(m: &ExactMatrix) -> BigRational {
    (0..m.rows()).fold(BigRational::zero(), |acc, i| acc + m.get(i, i))
}

fn rings() -> impl Strategy<Value = RingTag> {
    prop_oneof![
        Just(RingTag::Integers),
        Just(RingTag::Rationals),
        Just(RingTag::IntegersMod(4)),
        Just(RingTag::IntegersMod(5)),
    ]
}

/// A product of elementary matrices `I + c e_ij` and the product of their
/// inverses in reverse order.
fn unimodular(ring: RingTag, n: usize, ops: &[(usize, usize, i64)]) -> (ExactMatrix, ExactMatrix) {
    let elementary = |i: usize, j: usize, c: i64| {
        let mut e = ExactMatrix::identity(ring, n);
        e.set(i, j, ring.from_i64(c)).unwrap();
        e
    };
    let mut m = ExactMatrix::identity(ring, n);
    let mut inv = ExactMatrix::identity(ring, n);
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        m = elementary(i, j, c).mul(&m).unwrap();
        inv = inv.mul(&elementary(i, j, -c)).unwrap();
    }
    (m, inv)
}

proptest! {
    #[test]
    fn trace_ignores_choice_of_dual_pair(
        (n, f) in (1usize..=3).prop_flat_map(|n| (Just(n), entries(n * n))),
        ops in prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 0..6),
        ring in rings(),
    ) {
        let c = MatCategory::new(ring);
        let dp = mat_dual_pair(ring, n);
        let (phi, phi_inv) = unimodular(ring, n, &ops);
        prop_assert_eq!(phi.mul(&phi_inv).unwrap(), ExactMatrix::identity(ring, n));
        let other = conjugate_dual_pair(&c, &dp, &phi, &phi_inv).unwrap();
        prop_assert!(verify_dual_pair(&c, &other).unwrap());
        let f = matrix(ring, n, n, &f);
        let t = trace(&c, &other, &f).unwrap();
        prop_assert_eq!(c.scalar(&t).unwrap(), ring.reduce(diagonal(&f)));
        prop_assert!(c.mor_eq(&t, &trace(&c, &dp, &f).unwrap()));
    }

    #[test]
    fn trace_of_products_commutes((m, n, a, b) in conformable(), ring in rings()) {
        let a = matrix(ring, m, n, &a);
        let b = matrix(ring, n, m, &b);
        prop_assert_eq!(a.mul(&b).unwrap().trace().unwrap(), b.mul(&a).unwrap().trace().unwrap());
    }

    #[test]
    fn kronecker_trace_is_multiplicative(
        (p, a) in (0usize..=3).prop_flat_map(|p| (Just(p), entries(p * p))),
        (q, b) in (0usize..=3).prop_flat_map(|q| (Just(q), entries(q * q))),
    ) {
        let ring = RingTag::Integers;
        let (a, b) = (matrix(ring, p, p, &a), matrix(ring, q, q, &b));
        let k = a.kronecker(&b).unwrap();
        prop_assert_eq!(diagonal(&k), diagonal(&a) * diagonal(&b));
    }

    #[test]
    fn smith_normal_form_is_exact(
        (r, c, e) in (0usize..=4, 0usize..=4).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-6i64..=6, r * c)))
    ) {
        let a = matrix(RingTag::Integers, r, c, &e);
        let snf = a.smith_normal_form().unwrap();
        let product = snf.left.mul(&a).unwrap().mul(&snf.right).unwrap();
        prop_assert_eq!(&product, &snf.diagonal);
        for u in [&snf.left, &snf.right] {
            let det = u.change_ring(RingTag::Rationals).unwrap().determinant().unwrap();
            prop_assert!(det.abs().is_one());
        }
        for i in 0..r {
            for j in 0..c {
                if i != j {
                    prop_assert!(snf.diagonal.get(i, j).is_zero());
                }
            }
        }
        let factors = snf.invariant_factors();
        for w in factors.windows(2) {
            prop_assert!(w[0] > BigInt::zero());
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn rank_nullity((r, c, e) in (0usize..=4, 0usize..=4).prop_flat_map(|(r, c)| (Just(r), Just(c), entries(r * c)))) {
        let a = matrix(RingTag::Rationals, r, c, &e);
        let kernel = a.kernel_basis().unwrap();
        prop_assert_eq!(a.rank_over_field().unwrap() + kernel.cols(), c);
        prop_assert!(a.mul(&kernel).unwrap().is_zero());
    }

    #[test]
    fn relation_traces_are_cyclic(
        (n, m, fb, gb) in (0usize..=3, 0usize..=3).prop_flat_map(|(n, m)| {
            (Just(n), Just(m), prop::collection::vec(any::<bool>(), n * m), prop::collection::vec(any::<bool>(), n * m))
        })
    ) {
        let f = Relation::new(n, m, fb).unwrap();
        let g = Relation::new(m, n, gb).unwrap();
        let (dn, dm) = (dualtrace::combinat::rel_dual_pair(n), dualtrace::combinat::rel_dual_pair(m));
        prop_assert!(check_cyclicity(&RelCategory, &dn, &dm, &f, &g).unwrap());
    }

    #[test]
    fn cobordism_composition_is_associative(
        picks in prop::collection::vec(any::<prop::sample::Index>(), 3),
        circles in prop::collection::vec(0usize..=2, 3),
    ) {
        let c = CobCategory;
        let all = Cobordism1::all_matchings(2, 2);
        let [f, g, h] = [0, 1, 2].map(|i| all[picks[i].index(all.len())].with_circles(circles[i]));
        let left = c.compose(&h, &c.compose(&g, &f).unwrap()).unwrap();
        let right = c.compose(&c.compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn trace_of_products_commutes_exhaustively_on_small_shapes() {
    // every pair with m * n <= 2, entries in -2..=2
    let ring = RingTag::Integers;
    for (m, n) in [(0, 0), (1, 0), (0, 1), (1, 1), (1, 2), (2, 1)] {
        let k = m * n;
        let total = 5usize.pow(2 * k as u32);
        for code in 0..total {
            let mut x = code;
            let mut digits = Vec::with_capacity(2 * k);
            for _ in 0..2 * k {
                digits.push((x % 5) as i64 - 2);
                x /= 5;
            }
            let a = matrix(ring, m, n, &digits[..k]);
            let b = matrix(ring, n, m, &digits[k..]);
            assert_eq!(
                a.mul(&b).unwrap().trace().unwrap(),
                b.mul(&a).unwrap().trace().unwrap()
            );
        }
    }
}

#[test]
fn yanking_on_small_matrices() {
    for ring in [RingTag::Integers, RingTag::IntegersMod(3)] {
        let c = MatCategory::new(ring);
        for n in 0..=3 {
            assert!(check_yanking(&c, &mat_dual_pair(ring, n)).unwrap());
        }
    }
}
