//! Successive commutator subgroups of a finitely presented group, each stage
//! presented on its own generators with an ambient word dictionary, plus the
//! one-step central quotient of a rewritten subgroup.

use fpgroup::abelian::{
    abelian_invariants, abelianization_map, quotient_with_extra_rows, AbelianInvariants,
};
use fpgroup::coset::{
    kernel_coset_table, todd_coxeter, CosetTable, EnumerationError, EnumerationLimits,
};
use fpgroup::perm::{FiniteGroup, Permutation};
use fpgroup::presentation::{PermHom, PresentationError};
use fpgroup::rs::{subgroup_presentation, SubgroupPresentation};
use fpgroup::tietze::{simplify, TietzeBudget};
use fpgroup::word::{GenMap, Word};
use fpgroup::Presentation;
use num_traits::ToPrimitive;

#[derive(Debug, thiserror::Error)]
pub enum SeriesError {
    #[error("abelianization at depth {depth} has free rank {free_rank}, cannot descend")]
    InfiniteAbelianization { depth: usize, free_rank: usize },
    #[error("abelianization at depth {depth} has order beyond the coset limit")]
    AbelianizationTooLarge { depth: usize },
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Rewritten presentations above this letter total stay unsimplified.
const TIETZE_LETTER_CAP: usize = 20_000;

/// One stage of the derived series. Depth 0 is the input group; each later
/// stage is the commutator subgroup of the previous one.
#[derive(Debug, Clone)]
pub struct SeriesStage {
    pub depth: usize,
    pub presentation: Presentation,
    /// Each generator of this stage as a word of the depth-0 group.
    pub dictionary: Vec<Word>,
    pub invariants: AbelianInvariants,
    /// Index in the previous stage; 1 at depth 0.
    pub index_in_parent: usize,
}

/// Permutation realization of the finite abelianization: one cycle block per
/// torsion factor, each generator translating blockwise by its image.
pub fn abelian_quotient_hom(p: &Presentation, depth: usize) -> Result<PermHom, SeriesError> {
    let map = abelianization_map(p);
    if map.invariants.free_rank > 0 {
        return Err(SeriesError::InfiniteAbelianization {
            depth,
            free_rank: map.invariants.free_rank,
        });
    }
    let sizes: Vec<usize> = map
        .invariants
        .torsion
        .iter()
        .map(|d| d.to_usize().ok_or(SeriesError::AbelianizationTooLarge { depth }))
        .collect::<Result<_, _>>()?;
    let degree: usize = sizes.iter().sum::<usize>().max(1);
    let mut images = Vec::with_capacity(p.gen_count());
    for coords in &map.images {
        let mut im: Vec<u32> = (0..degree as u32).collect();
        let mut offset = 0;
        for (block, &d) in sizes.iter().enumerate() {
            let shift = coords[block].to_usize().expect("reduced coordinate");
            for j in 0..d {
                im[offset + j] = (offset + (j + shift) % d) as u32;
            }
            offset += d;
        }
        images.push(Permutation::from_images(im).expect("blockwise translation"));
    }
    Ok(PermHom::new(p.clone(), images).expect("one image per generator"))
}

/// The derived series down to `depth`, every stage finitely presented on a
/// simplified generating set with ambient dictionary words.
pub fn derived_series(
    p: &Presentation,
    depth: usize,
    limits: &EnumerationLimits,
) -> Result<Vec<SeriesStage>, SeriesError> {
    let gens = (0..p.gen_count()).map(|g| Word::gen(p.alphabet(), g)).collect();
    let mut stages = vec![SeriesStage {
        depth: 0,
        presentation: p.clone(),
        dictionary: gens,
        invariants: abelian_invariants(p),
        index_in_parent: 1,
    }];
    for k in 1..=depth {
        let prev = stages.last().expect("nonempty");
        let map = abelianization_map(&prev.presentation);
        match map.finite_order() {
            None => {
                return Err(SeriesError::InfiniteAbelianization {
                    depth: k - 1,
                    free_rank: map.invariants.free_rank,
                })
            }
            Some(order) if order > limits.max_cosets as u64 => {
                return Err(SeriesError::AbelianizationTooLarge { depth: k - 1 })
            }
            Some(_) => {}
        }
        let h = abelian_quotient_hom(&prev.presentation, k - 1)?;
        let t = kernel_coset_table(&h)?;
        let transversal = t.schreier_transversal();
        let sub = subgroup_presentation(&prev.presentation, &t, &transversal)?;
        let prev_map =
            GenMap::total(prev.presentation.alphabet(), p.alphabet(), prev.dictionary.clone());
        // Simplification cost grows superlinearly with presentation size, so
        // oversized rewrites are kept raw; every consumer works either way.
        let raw_letters: usize = sub.presentation.relators().iter().map(Word::len).sum();
        let (presentation, kept) = if raw_letters <= TIETZE_LETTER_CAP {
            let simplified = simplify(&sub.presentation, &TietzeBudget::default())?;
            (simplified.presentation, simplified.kept)
        } else {
            let all = (0..sub.presentation.gen_count()).collect();
            (sub.presentation.clone(), all)
        };
        let dictionary = kept
            .iter()
            .map(|&old| sub.dictionary()[old].substitute(&prev_map).expect("total map"))
            .collect();
        let invariants = abelian_invariants(&presentation);
        stages.push(SeriesStage {
            depth: k,
            presentation,
            dictionary,
            invariants,
            index_in_parent: t.n_cosets(),
        });
    }
    Ok(stages)
}

/// Coset table and quotient permutation group of the depth-0 group by the
/// normal subgroup a stage generates.
pub fn stage_quotient(
    p: &Presentation,
    stage: &SeriesStage,
    limits: &EnumerationLimits,
) -> Result<(CosetTable, FiniteGroup), EnumerationError> {
    let t = todd_coxeter(p, &stage.dictionary, limits)?;
    let g = t.permutation_group();
    Ok((t, g))
}

/// Quotient of a rewritten subgroup by its commutators with the whole
/// ambient group: abelianize and add one twist row per generator pair.
pub fn lower_central_step(
    ambient: &Presentation,
    t: &CosetTable,
    sub: &SubgroupPresentation,
) -> Result<AbelianInvariants, EnumerationError> {
    let alphabet = sub.presentation.alphabet();
    let mut extra = Vec::new();
    for (i, w) in sub.dictionary().iter().enumerate() {
        for g in 0..ambient.gen_count() {
            let conj = w
                .conjugated_by(&Word::gen(ambient.alphabet(), g))
                .expect("same alphabet");
            let rewritten = sub.schreier.rewrite(t, &conj)?;
            let twist = rewritten
                .concat(&Word::gen(alphabet, i).inverse())
                .expect("same alphabet");
            extra.push(twist);
        }
    }
    Ok(quotient_with_extra_rows(&sub.presentation, &extra))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_presentation, BraidGroup};
    use crate::gamma2::gamma2_subgroup;
    use crate::models::m3_presentation;

    fn chain(stages: &[SeriesStage]) -> Vec<String> {
        stages.iter().map(|s| s.invariants.to_string()).collect()
    }

    #[test]
    fn two_strand_series_bottoms_out() {
        let p = braid_presentation(2).unwrap();
        let stages = derived_series(&p, 2, &EnumerationLimits::default()).unwrap();
        assert_eq!(chain(&stages), ["(0, [2,2])", "(0, [4])", "(0, [])"]);
        assert_eq!(
            stages.iter().map(|s| s.index_in_parent).collect::<Vec<_>>(),
            [1, 4, 4]
        );
    }

    #[test]
    fn stage_dictionaries_generate_the_right_quotients() {
        let p = braid_presentation(2).unwrap();
        let limits = EnumerationLimits::default();
        let stages = derived_series(&p, 2, &limits).unwrap();
        let (t1, g1) = stage_quotient(&p, &stages[1], &limits).unwrap();
        assert_eq!(t1.n_cosets(), 4);
        assert!(g1.is_abelian());
        let (t2, g2) = stage_quotient(&p, &stages[2], &limits).unwrap();
        assert_eq!(t2.n_cosets(), 16);
        assert_eq!(g2.order(), 16);
    }

    #[test]
    fn free_abelianization_stops_the_descent() {
        let p = Presentation::parse_parts(&["a", "b"], &[]).unwrap();
        match derived_series(&p, 1, &EnumerationLimits::default()) {
            Err(SeriesError::InfiniteAbelianization { depth: 0, free_rank: 2 }) => {}
            other => panic!("expected an infinite abelianization, got {other:?}"),
        }
    }

    #[test]
    fn six_generator_presentation_descends_three_then_sixteen() {
        let p = m3_presentation();
        let stages = derived_series(&p, 2, &EnumerationLimits::default()).unwrap();
        assert_eq!(chain(&stages), ["(0, [3])", "(0, [2,2,2,2])", "(9, [2])"]);
        assert_eq!(
            stages.iter().map(|s| s.index_in_parent).collect::<Vec<_>>(),
            [1, 3, 16]
        );
    }

    #[test]
    fn central_quotient_of_the_two_strand_commutator_subgroup() {
        let bg = BraidGroup::new(2).unwrap();
        let (t, sub) = gamma2_subgroup(&bg).unwrap();
        let inv = lower_central_step(bg.presentation(), &t, &sub).unwrap();
        assert_eq!(inv.to_string(), "(0, [2])");
    }
}
