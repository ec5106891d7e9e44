//! Finite presentations and homomorphisms out of them.

use std::sync::Arc;

use thiserror::Error;

use crate::perm::{evaluate_word, FiniteGroup, Permutation};
use crate::snf::IntMatrix;
use crate::word::{same_alphabet, Alphabet, GenMap, Word, WordError};

/// Group presentation. Relators are freely and cyclically reduced; empty
/// relators are dropped. Relator order is the construction order and is
/// deterministic for a given input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Arc<Alphabet>,
    relators: Vec<Word>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("relator uses a different alphabet")]
    AlphabetMismatch,
    #[error("cannot parse presentation: {0}")]
    Parse(String),
    #[error("homomorphism image count {got} does not match generator count {want}")]
    ImageCount { got: usize, want: usize },
    #[error("no exact word-problem oracle available for the target")]
    OracleUnavailable,
}

impl Presentation {
    pub fn new(alphabet: &Arc<Alphabet>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut cleaned = Vec::with_capacity(relators.len());
        for r in relators {
            if !same_alphabet(r.alphabet(), alphabet) {
                return Err(PresentationError::AlphabetMismatch);
            }
            let (core, _) = r.cyclically_reduce();
            if !core.is_empty() {
                cleaned.push(core);
            }
        }
        Ok(Presentation { alphabet: Arc::clone(alphabet), relators: cleaned })
    }

    /// Free group: no relators.
    pub fn free(alphabet: &Arc<Alphabet>) -> Self {
        Presentation { alphabet: Arc::clone(alphabet), relators: Vec::new() }
    }

    /// Convenience constructor from generator names and relator words in the
    /// text format.
    pub fn parse_parts(gens: &[&str], relators: &[&str]) -> Result<Self, PresentationError> {
        let alphabet = Alphabet::new(gens.iter().copied())?;
        let words = relators
            .iter()
            .map(|r| Word::parse(&alphabet, r))
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::new(&alphabet, words)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn gen_count(&self) -> usize {
        self.alphabet.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn abelianized_relation_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.relators.len(), self.alphabet.len());
        for (i, r) in self.relators.iter().enumerate() {
            for (j, e) in r.exponent_vector().into_iter().enumerate() {
                m[(i, j)] = e.into();
            }
        }
        m
    }

    /// Parses the `gens:` / `rel:` line format. `#` starts a comment.
    pub fn parse_text(text: &str) -> Result<Self, PresentationError> {
        let mut alphabet: Option<Arc<Alphabet>> = None;
        let mut relators = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens:") {
                if alphabet.is_some() {
                    return Err(PresentationError::Parse(format!(
                        "line {}: repeated gens: line",
                        lineno + 1
                    )));
                }
                alphabet = Some(Alphabet::new(rest.split_whitespace())?);
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let al = alphabet.as_ref().ok_or_else(|| {
                    PresentationError::Parse(format!("line {}: rel: before gens:", lineno + 1))
                })?;
                relators.push(Word::parse(al, rest)?);
            } else {
                return Err(PresentationError::Parse(format!(
                    "line {}: expected gens: or rel:",
                    lineno + 1
                )));
            }
        }
        let alphabet = alphabet.ok_or_else(|| PresentationError::Parse("missing gens: line".into()))?;
        Presentation::new(&alphabet, relators)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("gens: {}\n", self.alphabet.names().join(" "));
        for r in &self.relators {
            out.push_str(&format!("rel: {r}\n"));
        }
        out
    }
}

/// Homomorphism into a finite permutation group, given by generator images.
#[derive(Debug, Clone)]
pub struct PermHom {
    pub source: Presentation,
    pub images: Vec<Permutation>,
}

impl PermHom {
    pub fn new(source: Presentation, images: Vec<Permutation>) -> Result<Self, PresentationError> {
        if images.len() != source.gen_count() {
            return Err(PresentationError::ImageCount {
                got: images.len(),
                want: source.gen_count(),
            });
        }
        Ok(PermHom { source, images })
    }

    pub fn evaluate(&self, w: &Word) -> Permutation {
        evaluate_word(w, &self.images)
    }

    /// Per-relator verdicts: does each relator map to the identity?
    pub fn relator_verdicts(&self) -> Vec<bool> {
        self.source.relators().iter().map(|r| self.evaluate(r).is_identity()).collect()
    }

    pub fn is_homomorphism(&self) -> bool {
        self.relator_verdicts().into_iter().all(|v| v)
    }

    /// The image subgroup.
    pub fn image(&self) -> FiniteGroup {
        let degree = self.images.first().map_or(0, Permutation::degree);
        FiniteGroup::new(degree, self.images.clone())
    }
}

/// Homomorphism between presented groups, given by generator image words.
#[derive(Debug, Clone)]
pub struct FpHom {
    pub source: Presentation,
    pub target: Presentation,
    pub map: GenMap,
}

impl FpHom {
    pub fn new(source: Presentation, target: Presentation, images: Vec<Word>) -> Result<Self, PresentationError> {
        if images.len() != source.gen_count() {
            return Err(PresentationError::ImageCount {
                got: images.len(),
                want: source.gen_count(),
            });
        }
        let map = GenMap::total(source.alphabet(), target.alphabet(), images);
        Ok(FpHom { source, target, map })
    }

    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        w.substitute(&self.map)
    }

    /// Relator verdicts need an exact word-problem decider for the target;
    /// `decide` returns whether a target word is trivial, or `None` when it
    /// cannot decide. Any undecidable relator is an error.
    pub fn relator_verdicts(
        &self,
        decide: impl Fn(&Word) -> Option<bool>,
    ) -> Result<Vec<bool>, PresentationError> {
        let mut out = Vec::new();
        for r in self.source.relators() {
            let image = self.apply(r)?;
            match decide(&image) {
                Some(v) => out.push(v),
                None => return Err(PresentationError::OracleUnavailable),
            }
        }
        Ok(out)
    }
}
