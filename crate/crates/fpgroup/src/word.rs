//! Free-group words over a named generator alphabet.
//!
//! A [`Word`] is always stored freely reduced, so two words over the same
//! alphabet represent the same element of the free group iff they are equal.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Ordered set of generator names. Generators are identified by index; the
/// declaration order fixes the shortlex precedence used elsewhere.
#[derive(Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("words use different alphabets")]
    AlphabetMismatch,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` has no image under the substitution")]
    UnmappedGenerator(String),
    #[error("cannot parse word: {0}")]
    Parse(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>, WordError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(WordError::DuplicateGenerator(n.clone()));
            }
        }
        Ok(Arc::new(Alphabet { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.names[gen]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

/// Two alphabets are interchangeable when they list the same names in the
/// same order. Pointer equality is the cheap common case.
pub fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// One letter: a generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    /// Column index used by coset tables: generator column then inverse column.
    pub fn column(self) -> usize {
        2 * self.gen + usize::from(self.inv)
    }
}

/// Freely reduced word. The empty word is the identity.
#[derive(Debug, Clone)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    letters: Vec<Letter>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet) && self.letters == other.letters
    }
}

impl Eq for Word {}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl Word {
    pub fn identity(alphabet: &Arc<Alphabet>) -> Self {
        Word { alphabet: Arc::clone(alphabet), letters: Vec::new() }
    }

    /// Builds a word from arbitrary letters, freely reducing as it goes.
    pub fn from_letters(alphabet: &Arc<Alphabet>, letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out = Vec::new();
        for l in letters {
            debug_assert!(l.gen < alphabet.len());
            push_reduced(&mut out, l);
        }
        Word { alphabet: Arc::clone(alphabet), letters: out }
    }

    pub fn gen(alphabet: &Arc<Alphabet>, gen: usize) -> Self {
        Word::from_letters(alphabet, [Letter::new(gen, false)])
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_alphabet(&self, other: &Word) -> Result<(), WordError> {
        if same_alphabet(&self.alphabet, &other.alphabet) {
            Ok(())
        } else {
            Err(WordError::AlphabetMismatch)
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        self.check_alphabet(other)?;
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Ok(Word { alphabet: Arc::clone(&self.alphabet), letters: out })
    }

    /// Product of several words, reducing across the joins.
    pub fn product<'a>(alphabet: &Arc<Alphabet>, parts: impl IntoIterator<Item = &'a Word>) -> Result<Word, WordError> {
        let mut out = Word::identity(alphabet);
        for p in parts {
            out = out.concat(p)?;
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        Word { alphabet: Arc::clone(&self.alphabet), letters }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity(&self.alphabet);
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base).expect("same alphabet");
        }
        out
    }

    /// `a.conjugated_by(t)` is `t a t^-1`.
    pub fn conjugated_by(&self, t: &Word) -> Result<Word, WordError> {
        t.concat(self)?.concat(&t.inverse())
    }

    /// `commutator(a, b)` is `a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Result<Word, WordError> {
        a.concat(b)?.concat(&a.inverse())?.concat(&b.inverse())
    }

    /// Splits off the maximal conjugating prefix: returns `(core, conj)` with
    /// `self == conj * core * conj^-1` and `core` cyclically reduced.
    pub fn cyclically_reduce(&self) -> (Word, Word) {
        let mut lo = 0;
        let mut hi = self.letters.len();
        while lo < hi && hi - lo >= 2 && self.letters[lo] == self.letters[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        let core = Word { alphabet: Arc::clone(&self.alphabet), letters: self.letters[lo..hi].to_vec() };
        let conj = Word { alphabet: Arc::clone(&self.alphabet), letters: self.letters[..lo].to_vec() };
        (core, conj)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) => f != l.inverse() || self.letters.len() == 1,
            _ => true,
        }
    }

    /// Canonical representative of the cyclic equivalence class of the word's
    /// cyclic core, up to rotation and inversion: the lexicographically least
    /// rotation of the core or of its inverse. Two relators define the same
    /// class iff these agree.
    pub fn cyclic_canonical(&self) -> Vec<Letter> {
        let (core, _) = self.cyclically_reduce();
        let n = core.letters.len();
        if n == 0 {
            return Vec::new();
        }
        let mut best: Option<Vec<Letter>> = None;
        for candidate in [core.clone(), core.inverse()] {
            for i in 0..n {
                let mut rot = Vec::with_capacity(n);
                rot.extend_from_slice(&candidate.letters[i..]);
                rot.extend_from_slice(&candidate.letters[..i]);
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        best.unwrap()
    }

    /// Net exponent of one generator.
    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| if l.inv { -1i64 } else { 1 }).sum()
    }

    /// Net exponents of all generators, indexed by generator id.
    pub fn exponent_vector(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.alphabet.len()];
        for l in &self.letters {
            v[l.gen] += if l.inv { -1 } else { 1 };
        }
        v
    }

    /// Applies a substitution (a monoid homomorphism on letters) and reduces.
    pub fn substitute(&self, map: &GenMap) -> Result<Word, WordError> {
        if !same_alphabet(&self.alphabet, &map.source) {
            return Err(WordError::AlphabetMismatch);
        }
        let mut out: Vec<Letter> = Vec::new();
        for l in &self.letters {
            let image = map.images[l.gen]
                .as_ref()
                .ok_or_else(|| WordError::UnmappedGenerator(self.alphabet.name(l.gen).to_string()))?;
            if l.inv {
                for il in image.letters.iter().rev() {
                    push_reduced(&mut out, il.inverse());
                }
            } else {
                for &il in &image.letters {
                    push_reduced(&mut out, il);
                }
            }
        }
        Ok(Word { alphabet: Arc::clone(&map.target), letters: out })
    }

    /// Parses the whitespace-separated `name`, `name^k`, `name^-1` format.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Word, WordError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| WordError::Parse(format!("bad exponent in `{tok}`")))?;
                    (n, exp)
                }
                None => (tok, 1),
            };
            let gen = alphabet.id(name).ok_or_else(|| WordError::UnknownGenerator(name.to_string()))?;
            for _ in 0..exp.unsigned_abs() {
                push_reduced(&mut letters, Letter::new(gen, exp < 0));
            }
        }
        Ok(Word { alphabet: Arc::clone(alphabet), letters })
    }
}

impl fmt::Display for Word {
    /// Prints with minimal exponent notation: runs of one letter collapse to
    /// `name^k`. The empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i + 1;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let run = (j - i) as i64;
            let exp = if l.inv { -run } else { run };
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "{}", self.alphabet.name(l.gen))?;
            } else {
                write!(f, "{}^{}", self.alphabet.name(l.gen), exp)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Substitution sending each source generator to a word over the target
/// alphabet. `None` marks a generator without an image.
#[derive(Debug, Clone)]
pub struct GenMap {
    pub source: Arc<Alphabet>,
    pub target: Arc<Alphabet>,
    pub images: Vec<Option<Word>>,
}

impl GenMap {
    pub fn new(source: &Arc<Alphabet>, target: &Arc<Alphabet>, images: Vec<Option<Word>>) -> Self {
        assert_eq!(images.len(), source.len());
        assert!(images
            .iter()
            .flatten()
            .all(|w| same_alphabet(w.alphabet(), target)));
        GenMap { source: Arc::clone(source), target: Arc::clone(target), images }
    }

    /// Total substitution from a full image list.
    pub fn total(source: &Arc<Alphabet>, target: &Arc<Alphabet>, images: Vec<Word>) -> Self {
        GenMap::new(source, target, images.into_iter().map(Some).collect())
    }

    /// Identity substitution.
    pub fn identity(alphabet: &Arc<Alphabet>) -> Self {
        let images = (0..alphabet.len()).map(|g| Some(Word::gen(alphabet, g))).collect();
        GenMap::new(alphabet, alphabet, images)
    }

    /// Composition: `self` then `next`.
    pub fn then(&self, next: &GenMap) -> Result<GenMap, WordError> {
        let mut images = Vec::with_capacity(self.images.len());
        for img in &self.images {
            images.push(match img {
                Some(w) => Some(w.substitute(next)?),
                None => None,
            });
        }
        Ok(GenMap { source: Arc::clone(&self.source), target: Arc::clone(&next.target), images })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Arc<Alphabet> {
        Alphabet::new(["a", "b"]).unwrap()
    }

    #[test]
    fn reduction_on_construction() {
        let al = ab();
        let w = Word::parse(&al, "a a^-1 b").unwrap();
        assert_eq!(w, Word::parse(&al, "b").unwrap());
        let w = Word::parse(&al, "a b b^-1 a^-1").unwrap();
        assert!(w.is_identity());
    }

    #[test]
    fn parse_and_print_roundtrip() {
        let al = ab();
        for text in ["1", "a", "a^-1", "a^3 b^-2 a", "b a^2 b^-1"] {
            let w = Word::parse(&al, text).unwrap();
            let printed = w.to_string();
            assert_eq!(Word::parse(&al, &printed).unwrap(), w);
            assert_eq!(printed, text);
        }
        assert_eq!(Word::parse(&al, "a a a").unwrap().to_string(), "a^3");
    }

    #[test]
    fn parse_rejects_unknown_generator() {
        let al = ab();
        assert_eq!(
            Word::parse(&al, "a c"),
            Err(WordError::UnknownGenerator("c".to_string()))
        );
    }

    #[test]
    fn concat_requires_same_alphabet() {
        let al1 = ab();
        let al2 = Alphabet::new(["x"]).unwrap();
        let a = Word::gen(&al1, 0);
        let x = Word::gen(&al2, 0);
        assert_eq!(a.concat(&x), Err(WordError::AlphabetMismatch));
    }

    #[test]
    fn commutator_of_generators() {
        let al = ab();
        let a = Word::gen(&al, 0);
        let b = Word::gen(&al, 1);
        let c = Word::commutator(&a, &b).unwrap();
        assert_eq!(c, Word::parse(&al, "a b a^-1 b^-1").unwrap());
        assert!(Word::commutator(&a, &a).unwrap().is_identity());
    }

    #[test]
    fn cyclic_reduction_splits_conjugator() {
        let al = ab();
        let w = Word::parse(&al, "a b a b^-1 a^-1").unwrap();
        let (core, conj) = w.cyclically_reduce();
        assert_eq!(core, Word::parse(&al, "a").unwrap());
        assert_eq!(conj, Word::parse(&al, "a b").unwrap());
        let rebuilt = core.conjugated_by(&conj).unwrap();
        assert_eq!(rebuilt, w);
        assert!(core.is_cyclically_reduced());
    }

    #[test]
    fn substitute_is_monoid_homomorphism() {
        let al = ab();
        let target = Alphabet::new(["x", "y"]).unwrap();
        let map = GenMap::total(
            &al,
            &target,
            vec![Word::parse(&target, "x y").unwrap(), Word::parse(&target, "y^-1").unwrap()],
        );
        let u = Word::parse(&al, "a b").unwrap();
        let v = Word::parse(&al, "b^-1 a^-1").unwrap();
        let uv = u.concat(&v).unwrap();
        assert_eq!(
            uv.substitute(&map).unwrap(),
            u.substitute(&map).unwrap().concat(&v.substitute(&map).unwrap()).unwrap()
        );
    }

    #[test]
    fn substitute_reports_unmapped_generator() {
        let al = ab();
        let target = Alphabet::new(["x"]).unwrap();
        let map = GenMap::new(&al, &target, vec![Some(Word::gen(&target, 0)), None]);
        assert_eq!(
            Word::parse(&al, "a b").unwrap().substitute(&map),
            Err(WordError::UnmappedGenerator("b".to_string()))
        );
    }

    #[test]
    fn exponent_vector_counts_net_occurrences() {
        let al = ab();
        let w = Word::parse(&al, "a^3 b^-1 a^-1 b^-1").unwrap();
        assert_eq!(w.exponent_vector(), vec![2, -2]);
        assert_eq!(w.exponent_sum(0), 2);
    }
}
