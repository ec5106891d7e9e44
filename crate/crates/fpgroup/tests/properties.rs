use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fpgroup::coset::{kernel_coset_table, todd_coxeter, EnumerationLimits};
use fpgroup::perm::Permutation;
use fpgroup::presentation::{PermHom, Presentation};
use fpgroup::rs::subgroup_presentation;
use fpgroup::snf::{smith_normal_form, IntMatrix};
use fpgroup::word::{Alphabet, GenMap, Letter, Word};

fn small_alphabet() -> Arc<Alphabet> {
    Alphabet::new(["a", "b", "c"]).unwrap()
}

fn letter_strategy() -> impl Strategy<Value = Letter> {
    (0usize..3, any::<bool>()).prop_map(|(g, inv)| Letter::new(g, inv))
}

fn raw_letters() -> impl Strategy<Value = Vec<Letter>> {
    proptest::collection::vec(letter_strategy(), 0..40)
}

proptest! {
    #[test]
    fn reduction_is_idempotent_and_nonincreasing(raw in raw_letters()) {
        let al = small_alphabet();
        let w = Word::from_letters(&al, raw.clone());
        prop_assert!(w.len() <= raw.len());
        let again = Word::from_letters(&al, w.letters().iter().copied());
        prop_assert_eq!(&again, &w);
    }

    #[test]
    fn double_inverse_and_cancellation(raw in raw_letters()) {
        let al = small_alphabet();
        let w = Word::from_letters(&al, raw);
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert!(w.concat(&w.inverse()).unwrap().is_empty());
    }

    #[test]
    fn substitution_commutes_with_reduction(u in raw_letters(), v in raw_letters()) {
        let al = small_alphabet();
        let target = Alphabet::new(["x", "y"]).unwrap();
        let images = vec![
            Word::parse(&target, "x y").unwrap(),
            Word::parse(&target, "y^-1").unwrap(),
            Word::parse(&target, "x y x^-1").unwrap(),
        ];
        let map = GenMap::total(&al, &target, images);
        let wu = Word::from_letters(&al, u);
        let wv = Word::from_letters(&al, v);
        let joined = wu.concat(&wv).unwrap().substitute(&map).unwrap();
        let split = wu.substitute(&map).unwrap().concat(&wv.substitute(&map).unwrap()).unwrap();
        prop_assert_eq!(joined, split);
    }

    #[test]
    fn cyclic_reduction_conjugate_identity(raw in raw_letters()) {
        let al = small_alphabet();
        let w = Word::from_letters(&al, raw);
        let (core, conj) = w.cyclically_reduce();
        prop_assert!(core.is_cyclically_reduced());
        let rebuilt = conj.concat(&core).unwrap().concat(&conj.inverse()).unwrap();
        prop_assert_eq!(rebuilt, w);
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> IntMatrix {
    let mut m = IntMatrix::zero(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = BigInt::from(rng.gen_range(-9i64..=9));
        }
    }
    m
}

/// Random unimodular matrix: a product of elementary row additions and
/// swaps applied to the identity.
fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        if n > 1 {
            while j == i {
                j = rng.gen_range(0..n);
            }
        }
        if i == j {
            continue;
        }
        let k = BigInt::from(rng.gen_range(-3i64..=3));
        for c in 0..n {
            let add = &m[(j, c)] * &k;
            let cur = m[(i, c)].clone();
            m[(i, c)] = cur + add;
        }
    }
    m
}

#[test]
fn snf_witnesses_and_unimodular_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for case in 0..100 {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=5);
        let m = random_matrix(&mut rng, rows, cols);
        let snf = smith_normal_form(&m, true);
        let left = snf.left.as_ref().unwrap();
        let right = snf.right.as_ref().unwrap();
        assert!(left.is_unimodular(), "case {case}: left witness");
        assert!(right.is_unimodular(), "case {case}: right witness");
        let product = left.mul(&m).mul(right);
        for i in 0..rows {
            for j in 0..cols {
                let want =
                    if i == j { snf.diagonal[i].clone() } else { BigInt::from(0) };
                assert_eq!(product[(i, j)], want, "case {case}: diagonal shape");
            }
        }
        for w in snf.diagonal.windows(2) {
            use num_integer::Integer;
            use num_traits::Zero;
            if !w[0].is_zero() {
                assert!(w[1].mod_floor(&w[0]).is_zero(), "case {case}: divisibility");
            } else {
                assert!(w[1].is_zero(), "case {case}: zeros trail");
            }
        }

        // Unimodular multiplication on either side preserves the invariants.
        let u = random_unimodular(&mut rng, rows);
        let v = random_unimodular(&mut rng, cols);
        let transformed = u.mul(&m).mul(&v);
        let snf2 = smith_normal_form(&transformed, false);
        assert_eq!(snf.diagonal, snf2.diagonal, "case {case}: invariance");
    }
}

fn random_perm(rng: &mut ChaCha8Rng, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for i in (1..degree).rev() {
        let j = rng.gen_range(0..=i);
        images.swap(i, j);
    }
    Permutation::from_images(images).unwrap()
}

#[test]
fn nielsen_schreier_rank_on_random_kernels() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    while done < 100 {
        let k = rng.gen_range(2..=3);
        let degree = rng.gen_range(2..=5);
        let names: Vec<String> = (0..k).map(|i| format!("g{i}")).collect();
        let free = Presentation::parse_parts(
            &names.iter().map(String::as_str).collect::<Vec<_>>(),
            &[],
        )
        .unwrap();
        let images: Vec<Permutation> = (0..k).map(|_| random_perm(&mut rng, degree)).collect();
        let hom = PermHom::new(free.clone(), images).unwrap();
        let t = kernel_coset_table(&hom).unwrap();
        let index = t.n_cosets();
        if index == 1 {
            continue;
        }
        let sp = subgroup_presentation(&free, &t, &t.schreier_transversal()).unwrap();
        assert!(sp.presentation.relators().is_empty(), "kernel of a free group is free");
        assert_eq!(
            sp.presentation.gen_count(),
            index * (k - 1) + 1,
            "rank formula for index {index}, k {k}"
        );
        done += 1;
    }
}

#[test]
fn kernel_table_equals_enumeration_on_random_kernels() {
    // Ambient group Z6 x Z6; maps onto cyclic images land in Sym(k) for
    // k dividing 6, so every generator assignment is a homomorphism.
    let p = Presentation::parse_parts(
        &["a", "b"],
        &["a^6", "b^6", "a b a^-1 b^-1"],
    )
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..25 {
        let k = [2u32, 3, 6][rng.gen_range(0..3)];
        let shift = |s: u32| {
            Permutation::from_images((0..k).map(|i| (i + s) % k).collect()).unwrap()
        };
        let images = vec![shift(rng.gen_range(0..k)), shift(rng.gen_range(0..k))];
        let hom = PermHom::new(p.clone(), images).unwrap();
        let kt = kernel_coset_table(&hom).unwrap();
        assert_eq!(6 % kt.n_cosets(), 0, "index divides the image exponent");
        // Kernel generators: Schreier generators read off the kernel table.
        let sp = subgroup_presentation(&p, &kt, &kt.schreier_transversal()).unwrap();
        let tc = todd_coxeter(&p, sp.dictionary(), &EnumerationLimits::default()).unwrap();
        assert_eq!(kt, tc);
    }
}
