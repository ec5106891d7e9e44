//! Abelian invariants of presented groups via Smith normal form.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::presentation::Presentation;
use crate::snf::{smith_normal_form, IntMatrix};
use crate::word::Word;

/// Invariant factors of a finitely generated abelian group: free rank plus a
/// torsion chain `d1 | d2 | ... | dk` with every `di >= 2`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants { free_rank: 0, torsion: vec![] }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, when finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Convenience constructor from small torsion values.
    pub fn from_parts(free_rank: usize, torsion: &[u64]) -> Self {
        AbelianInvariants { free_rank, torsion: torsion.iter().map(|&d| d.into()).collect() }
    }

}

/// Renders as `(free_rank, [d1, d2, ...])`.
impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let t: Vec<String> = self.torsion.iter().map(BigInt::to_string).collect();
        write!(f, "({}, [{}])", self.free_rank, t.join(","))
    }
}

/// Invariants of the cokernel of the relation matrix: one row per relator.
pub fn invariants_of_matrix(m: &IntMatrix) -> AbelianInvariants {
    let snf = smith_normal_form(m, false);
    let torsion = snf
        .diagonal
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    AbelianInvariants { free_rank: m.cols - snf.rank(), torsion }
}

/// Abelianization invariants of a presentation.
pub fn abelian_invariants(p: &Presentation) -> AbelianInvariants {
    invariants_of_matrix(&p.abelianized_relation_matrix())
}

/// Invariants of the abelianization with extra relator rows appended.
pub fn quotient_with_extra_rows(p: &Presentation, extra: &[Word]) -> AbelianInvariants {
    let base = p.abelianized_relation_matrix();
    let mut m = IntMatrix::zero(base.rows + extra.len(), p.gen_count());
    for i in 0..base.rows {
        for j in 0..base.cols {
            m[(i, j)] = base[(i, j)].clone();
        }
    }
    for (i, w) in extra.iter().enumerate() {
        for (j, e) in w.exponent_vector().into_iter().enumerate() {
            m[(base.rows + i, j)] = e.into();
        }
    }
    invariants_of_matrix(&m)
}

/// Surjection onto the abelianization with explicit generator images.
///
/// Coordinates are the torsion coordinates (mod `d_i`) followed by the free
/// coordinates. Derived from the right SNF witness: with `L*A*R = D` for the
/// relation matrix `A`, generator `j` maps to row `j` of `R`.
#[derive(Debug, Clone)]
pub struct AbelianizationMap {
    pub invariants: AbelianInvariants,
    /// Per generator: torsion coords then free coords.
    pub images: Vec<Vec<BigInt>>,
}

pub fn abelianization_map(p: &Presentation) -> AbelianizationMap {
    let a = p.abelianized_relation_matrix();
    let snf = smith_normal_form(&a, true);
    let r = snf.right.expect("witnesses requested");
    let g = p.gen_count();

    // Column k of the transformed coordinates corresponds to diagonal d_k.
    // Torsion columns: 2 <= d_k; unit columns drop; zero columns are free.
    let mut torsion_cols = Vec::new();
    let mut torsion = Vec::new();
    let mut free_cols = Vec::new();
    for k in 0..g {
        let d = if k < snf.diagonal.len() { snf.diagonal[k].clone() } else { BigInt::zero() };
        if d.is_zero() {
            free_cols.push(k);
        } else if !d.is_one() {
            torsion_cols.push(k);
            torsion.push(d);
        }
    }

    let mut images = Vec::with_capacity(g);
    for j in 0..g {
        let mut coords = Vec::with_capacity(torsion_cols.len() + free_cols.len());
        for (t, &k) in torsion_cols.iter().enumerate() {
            let v = num_integer::Integer::mod_floor(&r[(j, k)], &torsion[t]);
            coords.push(v);
        }
        for &k in &free_cols {
            coords.push(r[(j, k)].clone());
        }
        images.push(coords);
    }

    AbelianizationMap {
        invariants: AbelianInvariants { free_rank: free_cols.len(), torsion },
        images,
    }
}

impl AbelianizationMap {
    /// Image of a word, as torsion-then-free coordinates.
    pub fn image(&self, w: &Word) -> Vec<BigInt> {
        let dims = self.invariants.torsion.len() + self.invariants.free_rank;
        let mut out = vec![BigInt::zero(); dims];
        for (j, e) in w.exponent_vector().into_iter().enumerate() {
            if e == 0 {
                continue;
            }
            for (k, c) in self.images[j].iter().enumerate() {
                out[k] += c * e;
            }
        }
        for (k, d) in self.invariants.torsion.iter().enumerate() {
            out[k] = num_integer::Integer::mod_floor(&out[k], d);
        }
        out
    }

    /// Total order of the image group, when finite.
    pub fn finite_order(&self) -> Option<u64> {
        if self.invariants.free_rank > 0 {
            return None;
        }
        let mut total = 1u64;
        for d in &self.invariants.torsion {
            total = total.checked_mul(d.to_u64()?)?;
        }
        Some(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_of_order_two() {
        let p = Presentation::parse_parts(&["x"], &["x^2"]).unwrap();
        let inv = abelian_invariants(&p);
        assert_eq!(inv, AbelianInvariants::from_parts(0, &[2]));
        assert_eq!(inv.order(), Some(2.into()));
        assert_eq!(inv.to_string(), "(0, [2])");
    }

    #[test]
    fn free_group_has_free_abelianization() {
        let p = Presentation::parse_parts(&["a", "b", "c"], &[]).unwrap();
        assert_eq!(abelian_invariants(&p), AbelianInvariants { free_rank: 3, torsion: vec![] });
    }

    #[test]
    fn extra_rows_cut_the_quotient() {
        let p = Presentation::parse_parts(&["a", "b"], &[]).unwrap();
        let w = Word::parse(p.alphabet(), "a^2 b^-2").unwrap();
        let inv = quotient_with_extra_rows(&p, &[w]);
        assert_eq!(inv.free_rank, 1);
        assert_eq!(inv.torsion, vec![BigInt::from(2)]);
        // No extra rows: unchanged.
        assert_eq!(quotient_with_extra_rows(&p, &[]), abelian_invariants(&p));
    }

    #[test]
    fn abelianization_map_respects_relators() {
        let p = Presentation::parse_parts(
            &["s", "r"],
            &["r^2 s^-2", "s^2 r^-1 s^2 r^-1"],
        )
        .unwrap();
        let m = abelianization_map(&p);
        for rel in p.relators() {
            assert!(m.image(rel).iter().all(Zero::is_zero), "relator image nonzero");
        }
        // Generator images generate the quotient: the map must be onto, which
        // for a finite quotient means the images' subgroup has full order.
        if let Some(order) = m.finite_order() {
            let mut seen = std::collections::HashSet::new();
            let mut frontier = vec![vec![BigInt::zero(); m.invariants.torsion.len()]];
            seen.insert(frontier[0].clone());
            while let Some(cur) = frontier.pop() {
                for img in &m.images {
                    let mut next = cur.clone();
                    for (k, c) in img.iter().enumerate() {
                        next[k] += c;
                        next[k] = num_integer::Integer::mod_floor(&next[k], &m.invariants.torsion[k]);
                    }
                    if seen.insert(next.clone()) {
                        frontier.push(next);
                    }
                }
            }
            assert_eq!(seen.len() as u64, order);
        }
    }

    #[test]
    fn map_image_of_identity_is_zero() {
        let p = Presentation::parse_parts(&["x"], &["x^4"]).unwrap();
        let m = abelianization_map(&p);
        assert_eq!(m.invariants, AbelianInvariants::from_parts(0, &[4]));
        let id = Word::identity(p.alphabet());
        assert!(m.image(&id).iter().all(Zero::is_zero));
        let x = Word::parse(p.alphabet(), "x^5").unwrap();
        assert_eq!(m.image(&x), vec![BigInt::one()]);
    }
}
