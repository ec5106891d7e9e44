//! Presentations of the braid groups of the projective plane and a word
//! dictionary for the elements the computations keep coming back to.

use std::sync::Arc;

use fpgroup::word::{Alphabet, Word};
use fpgroup::{Presentation, PresentationError, WordError};

#[derive(Debug, thiserror::Error)]
pub enum BraidError {
    #[error("strand count must be at least 1")]
    InvalidStrandCount,
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// The n-strand braid group of the projective plane with its standard
/// generators: band generators s1..s_{n-1} and point generators r1..rn.
#[derive(Debug, Clone)]
pub struct BraidGroup {
    n: usize,
    presentation: Presentation,
}

/// Relator count of the standard presentation.
pub fn relator_count(n: usize) -> usize {
    match n {
        0 | 1 => 1,
        2 => 3,
        _ => (n - 2) * (n - 3) / 2 + (n - 2) + (n - 1) * (n - 2) + (n - 1) + (n - 1) + 1,
    }
}

/// Builds the standard presentation of the n-strand group. `n == 0` is
/// rejected; `n == 1` is the cyclic group of order two.
pub fn braid_presentation(n: usize) -> Result<Presentation, BraidError> {
    BraidGroup::new(n).map(|g| g.presentation)
}

impl BraidGroup {
    pub fn new(n: usize) -> Result<Self, BraidError> {
        if n == 0 {
            return Err(BraidError::InvalidStrandCount);
        }
        let mut names = Vec::with_capacity(2 * n - 1);
        for i in 1..n {
            names.push(format!("s{i}"));
        }
        for j in 1..=n {
            names.push(format!("r{j}"));
        }
        let alphabet = Alphabet::new(names)?;
        let s = |i: usize| Word::gen(&alphabet, i - 1);
        let r = |j: usize| Word::gen(&alphabet, n - 1 + j - 1);
        let prod = |parts: &[&Word]| Word::product(&alphabet, parts.iter().copied());

        let mut relators = Vec::with_capacity(relator_count(n));
        // Distant band generators commute.
        for i in 1..n {
            for j in i + 2..n {
                relators.push(prod(&[&s(i), &s(j), &s(i).inverse(), &s(j).inverse()])?);
            }
        }
        // Adjacent band generators braid.
        for i in 1..n - 1 {
            relators.push(prod(&[
                &s(i),
                &s(i + 1),
                &s(i),
                &s(i + 1).inverse(),
                &s(i).inverse(),
                &s(i + 1).inverse(),
            ])?);
        }
        // A point generator commutes with every band not at its position.
        for i in 1..n {
            for j in 1..=n {
                if j != i && j != i + 1 {
                    relators.push(prod(&[&s(i), &r(j), &s(i).inverse(), &r(j).inverse()])?);
                }
            }
        }
        // Consecutive point generators differ by a band on both sides.
        for i in 1..n {
            relators.push(prod(&[
                &s(i).inverse(),
                &r(i),
                &s(i).inverse(),
                &r(i + 1).inverse(),
            ])?);
        }
        // The commutator of consecutive point generators is a full band.
        for i in 1..n {
            relators.push(prod(&[
                &r(i + 1).inverse(),
                &r(i).inverse(),
                &r(i + 1),
                &r(i),
                &s(i).pow(-2),
            ])?);
        }
        // The surface relation for the first point generator.
        let mut surface = vec![r(1).pow(2)];
        for i in 1..n - 1 {
            surface.push(s(i).inverse());
        }
        if n >= 2 {
            surface.push(s(n - 1).pow(-2));
        }
        for i in (1..n - 1).rev() {
            surface.push(s(i).inverse());
        }
        relators.push(Word::product(&alphabet, surface.iter())?);

        debug_assert_eq!(relators.len(), relator_count(n));
        Ok(BraidGroup { n, presentation: Presentation::new(&alphabet, relators)? })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.presentation.alphabet()
    }

    /// Band generator, 1-based; valid for 1 <= i <= n-1.
    pub fn sigma(&self, i: usize) -> Word {
        assert!(1 <= i && i < self.n, "sigma index out of range");
        Word::gen(self.alphabet(), i - 1)
    }

    /// Point generator, 1-based; valid for 1 <= j <= n.
    pub fn rho(&self, j: usize) -> Word {
        assert!(1 <= j && j <= self.n, "rho index out of range");
        Word::gen(self.alphabet(), self.n - 1 + j - 1)
    }

    fn prod(&self, parts: &[&Word]) -> Word {
        Word::product(self.alphabet(), parts.iter().copied()).expect("dictionary words share one alphabet")
    }

    /// Pure-braid band B_{i,j} = s_{j-1} .. s_{i+1} s_i^2 s_{i+1}^-1 .. s_{j-1}^-1
    /// for 1 <= i < j <= n.
    pub fn band(&self, i: usize, j: usize) -> Word {
        assert!(1 <= i && i < j && j <= self.n, "band indices out of range");
        let mut parts = Vec::new();
        for k in (i + 1..j).rev() {
            parts.push(self.sigma(k));
        }
        parts.push(self.sigma(i).pow(2));
        for k in i + 1..j {
            parts.push(self.sigma(k).inverse());
        }
        Word::product(self.alphabet(), parts.iter()).expect("single alphabet")
    }

    /// The torsion element a = rn s_{n-1} .. s1 of order 4n.
    pub fn a_word(&self) -> Word {
        let mut parts = vec![self.rho(self.n)];
        for i in (1..self.n).rev() {
            parts.push(self.sigma(i));
        }
        Word::product(self.alphabet(), parts.iter()).expect("single alphabet")
    }

    /// Alternative expression a = s_{n-1}^-1 .. s1^-1 r1.
    pub fn a_word_alt(&self) -> Word {
        let mut parts = Vec::new();
        for i in (1..self.n).rev() {
            parts.push(self.sigma(i).inverse());
        }
        parts.push(self.rho(1));
        Word::product(self.alphabet(), parts.iter()).expect("single alphabet")
    }

    /// The torsion element b = r_{n-1} s_{n-2} .. s1 of order 4(n-1);
    /// needs n >= 2.
    pub fn b_word(&self) -> Word {
        assert!(self.n >= 2, "b needs at least two strands");
        let mut parts = vec![self.rho(self.n - 1)];
        for i in (1..self.n - 1).rev() {
            parts.push(self.sigma(i));
        }
        Word::product(self.alphabet(), parts.iter()).expect("single alphabet")
    }

    /// Alternative expression b = s_{n-2}^-1 .. s1^-1 r1.
    pub fn b_word_alt(&self) -> Word {
        assert!(self.n >= 2, "b needs at least two strands");
        let mut parts = Vec::new();
        for i in (1..self.n - 1).rev() {
            parts.push(self.sigma(i).inverse());
        }
        parts.push(self.rho(1));
        Word::product(self.alphabet(), parts.iter()).expect("single alphabet")
    }

    /// Descending product rk rk-1 .. r1 of the first k point generators.
    pub fn rho_descending(&self, k: usize) -> Word {
        assert!(k <= self.n);
        let mut parts = Vec::new();
        for j in (1..=k).rev() {
            parts.push(self.rho(j));
        }
        Word::product(self.alphabet(), parts.iter()).expect("single alphabet")
    }

    /// Garside half twist (s1 s2 .. s_{n-1})(s1 .. s_{n-2}) .. (s1 s2)(s1).
    pub fn garside(&self) -> Word {
        let mut parts = Vec::new();
        for k in (1..self.n).rev() {
            for i in 1..=k {
                parts.push(self.sigma(i));
            }
        }
        Word::product(self.alphabet(), parts.iter()).expect("single alphabet")
    }

    /// Full twist, the square of the half twist.
    pub fn full_twist(&self) -> Word {
        self.garside().pow(2)
    }

    /// Generators of the subgroup K on which the three-strand commutator
    /// computations live: x = r2 r1, y = r2 B_{1,2} r3^-1, z1 = r3^2,
    /// z2 = B_{2,3}, z3 = r3 B_{2,3} r3^-1, plus u = a^4. Three strands only.
    pub fn m3_dictionary(&self) -> [Word; 6] {
        assert_eq!(self.n, 3, "the x y u z dictionary is three-strand specific");
        let x = self.prod(&[&self.rho(2), &self.rho(1)]);
        let y = self.prod(&[&self.rho(2), &self.band(1, 2), &self.rho(3).inverse()]);
        let u = self.a_word().pow(4);
        let z1 = self.rho(3).pow(2);
        let z2 = self.band(2, 3);
        let z3 = self.band(2, 3).conjugated_by(&self.rho(3)).expect("single alphabet");
        [x, y, u, z1, z2, z3]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fpgroup::abelian::abelian_invariants;
    use fpgroup::coset::{todd_coxeter, EnumerationLimits};

    #[test]
    fn strand_count_zero_is_rejected() {
        assert!(matches!(BraidGroup::new(0), Err(BraidError::InvalidStrandCount)));
    }

    #[test]
    fn one_strand_group_is_order_two() {
        let p = braid_presentation(1).unwrap();
        assert_eq!(p.gen_count(), 1);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].to_string(), "r1^2");
        let t = todd_coxeter(&p, &[], &EnumerationLimits::default()).unwrap();
        assert_eq!(t.n_cosets(), 2);
    }

    #[test]
    fn generator_and_relator_counts() {
        for n in 2..=6 {
            let p = braid_presentation(n).unwrap();
            assert_eq!(p.gen_count(), 2 * n - 1);
            assert_eq!(p.relators().len(), relator_count(n));
        }
        assert_eq!(relator_count(3), 8);
        assert_eq!(relator_count(4), 16);
        assert_eq!(relator_count(5), 27);
    }

    #[test]
    fn two_strand_group_has_order_sixteen() {
        let p = braid_presentation(2).unwrap();
        let t = todd_coxeter(&p, &[], &EnumerationLimits::default()).unwrap();
        assert_eq!(t.n_cosets(), 16);
    }

    #[test]
    fn abelianization_is_klein_four_from_three_strands_up() {
        for n in 2..=5 {
            let inv = abelian_invariants(&braid_presentation(n).unwrap());
            assert_eq!(inv.to_string(), "(0, [2,2])", "n = {n}");
        }
        let inv = abelian_invariants(&braid_presentation(1).unwrap());
        assert_eq!(inv.to_string(), "(0, [2])");
    }

    #[test]
    fn band_words_expand_as_conjugated_squares() {
        let g = BraidGroup::new(4).unwrap();
        assert_eq!(g.band(1, 2), g.sigma(1).pow(2));
        assert_eq!(g.band(2, 3), g.sigma(2).pow(2));
        assert_eq!(
            g.band(1, 4),
            g.sigma(1)
                .pow(2)
                .conjugated_by(&g.prod(&[&g.sigma(3), &g.sigma(2)]))
                .unwrap()
        );
    }

    #[test]
    fn torsion_word_forms() {
        let g = BraidGroup::new(3).unwrap();
        assert_eq!(g.a_word().to_string(), "r3 s2 s1");
        assert_eq!(g.a_word_alt().to_string(), "s2^-1 s1^-1 r1");
        assert_eq!(g.b_word().to_string(), "r2 s1");
        assert_eq!(g.garside().to_string(), "s1 s2 s1");
        let g = BraidGroup::new(2).unwrap();
        assert_eq!(g.b_word().to_string(), "r1");
        assert_eq!(g.garside().to_string(), "s1");
    }

    #[test]
    fn garside_word_freely_conjugates_b_to_the_band_form() {
        // b Delta a^-1 reduces freely to r2 s1^2 r3^-1 = r2 B_{1,2} r3^-1.
        let g = BraidGroup::new(3).unwrap();
        let w = g.prod(&[&g.b_word(), &g.garside(), &g.a_word().inverse()]);
        assert_eq!(w, g.prod(&[&g.rho(2), &g.band(1, 2), &g.rho(3).inverse()]));
    }
}
