//! Bounded Tietze simplification: generator elimination, relator dedup, and
//! subword shortening, preserving the presented group.

use std::collections::HashMap;
use std::sync::Arc;

use crate::presentation::{Presentation, PresentationError};
use crate::word::{Alphabet, GenMap, Letter, Word};

#[derive(Debug, Clone, Copy)]
pub struct TietzeBudget {
    pub max_passes: usize,
    pub max_relator_len: usize,
}

impl Default for TietzeBudget {
    fn default() -> Self {
        TietzeBudget { max_passes: 50, max_relator_len: 10_000 }
    }
}

/// Simplification result. `dictionary[old_gen]` expresses each original
/// generator as a word over the new alphabet; `kept[new_gen]` is the original
/// id of each surviving generator.
#[derive(Debug, Clone)]
pub struct Simplified {
    pub presentation: Presentation,
    pub kept: Vec<usize>,
    pub dictionary: Vec<Word>,
}

pub fn simplify(p: &Presentation, budget: &TietzeBudget) -> Result<Simplified, PresentationError> {
    let alphabet = Arc::clone(p.alphabet());
    let g = alphabet.len();
    let mut live = vec![true; g];
    // Replacement for eliminated generators, over live letters of the
    // original alphabet. Kept in sync as later eliminations refine it.
    let mut replacement: Vec<Option<Word>> = vec![None; g];
    let mut relators: Vec<Word> = p.relators().to_vec();

    for _pass in 0..budget.max_passes {
        dedup(&mut relators);
        let mut changed = shorten_with_length_one_and_two(&mut relators, &mut live, &mut replacement, &alphabet);
        if !changed {
            changed = eliminate_one(&mut relators, &mut live, &mut replacement, &alphabet, budget);
        }
        if !changed {
            changed = shorten_by_overlap(&mut relators, budget);
        }
        if !changed {
            break;
        }
    }
    dedup(&mut relators);

    // Build the new alphabet from surviving generators.
    let kept: Vec<usize> = (0..g).filter(|&i| live[i]).collect();
    let new_alphabet = Alphabet::new(kept.iter().map(|&i| alphabet.name(i)))?;
    let mut old_to_new = vec![usize::MAX; g];
    for (n, &o) in kept.iter().enumerate() {
        old_to_new[o] = n;
    }
    let reindex = |w: &Word| -> Word {
        Word::from_letters(
            &new_alphabet,
            w.letters().iter().map(|l| Letter::new(old_to_new[l.gen], l.inv)),
        )
    };

    let relators = relators.iter().map(&reindex).collect();
    let mut dictionary = Vec::with_capacity(g);
    for i in 0..g {
        if live[i] {
            dictionary.push(Word::gen(&new_alphabet, old_to_new[i]));
        } else {
            dictionary.push(reindex(replacement[i].as_ref().expect("eliminated gen has replacement")));
        }
    }

    Ok(Simplified { presentation: Presentation::new(&new_alphabet, relators)?, kept, dictionary })
}

/// The dictionary as a substitution old-alphabet -> new-alphabet.
impl Simplified {
    pub fn dictionary_map(&self, old: &Arc<Alphabet>) -> GenMap {
        GenMap::total(old, self.presentation.alphabet(), self.dictionary.clone())
    }
}

fn dedup(relators: &mut Vec<Word>) {
    let mut seen = HashMap::new();
    let mut out = Vec::with_capacity(relators.len());
    for r in relators.drain(..) {
        let (core, _) = r.cyclically_reduce();
        if core.is_empty() {
            continue;
        }
        if seen.insert(core.cyclic_canonical(), ()).is_none() {
            out.push(core);
        }
    }
    *relators = out;
}

/// Occurrence count of each generator in a word.
fn occurrences(w: &Word, counts: &mut [usize]) {
    counts.fill(0);
    for l in w.letters() {
        counts[l.gen] += 1;
    }
}

/// Eliminates via relators of length 1 (generator is trivial) and applies
/// them everywhere. Returns whether anything changed.
fn shorten_with_length_one_and_two(
    relators: &mut Vec<Word>,
    live: &mut [bool],
    replacement: &mut [Option<Word>],
    alphabet: &Arc<Alphabet>,
) -> bool {
    let Some(idx) = relators.iter().position(|r| r.len() == 1) else {
        return false;
    };
    let gen = relators[idx].letters()[0].gen;
    apply_elimination(relators, live, replacement, alphabet, idx, gen, Word::identity(alphabet));
    true
}

/// One generator elimination: a relator containing some generator exactly
/// once lets that generator be expressed in the others.
fn eliminate_one(
    relators: &mut Vec<Word>,
    live: &mut [bool],
    replacement: &mut [Option<Word>],
    alphabet: &Arc<Alphabet>,
    budget: &TietzeBudget,
) -> bool {
    let mut counts = vec![0usize; alphabet.len()];
    let mut order: Vec<usize> = (0..relators.len()).collect();
    order.sort_by_key(|&i| relators[i].len());
    for &idx in &order {
        occurrences(&relators[idx], &mut counts);
        let single = relators[idx]
            .letters()
            .iter()
            .position(|l| counts[l.gen] == 1);
        let Some(pos) = single else { continue };
        let letters = relators[idx].letters();
        let l = letters[pos];
        // Rotate so the unique occurrence leads, then solve for the
        // generator: (g rest) = 1 gives g = rest^-1, (g^-1 rest) = 1 gives
        // g = rest.
        let mut rest: Vec<Letter> = Vec::with_capacity(letters.len() - 1);
        rest.extend_from_slice(&letters[pos + 1..]);
        rest.extend_from_slice(&letters[..pos]);
        let rest = Word::from_letters(alphabet, rest);
        let w = if l.inv { rest } else { rest.inverse() };

        // Respect the relator length cap.
        let grow = w.len().max(1);
        let fits = relators.iter().enumerate().all(|(i, r)| {
            if i == idx {
                return true;
            }
            occurrences_of(r, l.gen) * grow + r.len() <= budget.max_relator_len
        });
        if !fits {
            continue;
        }
        apply_elimination(relators, live, replacement, alphabet, idx, l.gen, w);
        return true;
    }
    false
}

fn occurrences_of(w: &Word, gen: usize) -> usize {
    w.letters().iter().filter(|l| l.gen == gen).count()
}

fn apply_elimination(
    relators: &mut Vec<Word>,
    live: &mut [bool],
    replacement: &mut [Option<Word>],
    alphabet: &Arc<Alphabet>,
    relator_idx: usize,
    gen: usize,
    w: Word,
) {
    debug_assert!(live[gen]);
    debug_assert!(w.letters().iter().all(|l| l.gen != gen));
    relators.swap_remove(relator_idx);
    let subst = |word: &Word| -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(word.len());
        for l in word.letters() {
            if l.gen == gen {
                if l.inv {
                    out.extend(w.letters().iter().rev().map(|x| x.inverse()));
                } else {
                    out.extend_from_slice(w.letters());
                }
            } else {
                out.push(*l);
            }
        }
        Word::from_letters(alphabet, out)
    };
    for r in relators.iter_mut() {
        let s = subst(r);
        let (core, _) = s.cyclically_reduce();
        *r = core;
    }
    for rep in replacement.iter_mut() {
        if let Some(rw) = rep {
            if occurrences_of(rw, gen) > 0 {
                *rep = Some(subst(rw));
            }
        }
    }
    live[gen] = false;
    replacement[gen] = Some(w);
}

/// Rewrites a long relator using a shorter one when more than half of the
/// shorter relator appears as a subword. Keeps total length decreasing,
/// preserving the normal closure.
fn shorten_by_overlap(relators: &mut Vec<Word>, budget: &TietzeBudget) -> bool {
    let n = relators.len();
    if n > 4000 {
        return false;
    }
    let _ = budget;
    for si in 0..n {
        let s = relators[si].clone();
        let slen = s.len();
        if slen < 2 {
            continue;
        }
        let half = slen / 2 + 1;
        // All rotations of s and its inverse.
        let mut variants = Vec::with_capacity(2 * slen);
        for base in [s.clone(), s.inverse()] {
            let letters = base.letters();
            for i in 0..slen {
                let mut rot = Vec::with_capacity(slen);
                rot.extend_from_slice(&letters[i..]);
                rot.extend_from_slice(&letters[..i]);
                variants.push(rot);
            }
        }
        for (ri, r) in relators.iter().enumerate() {
            if ri == si || r.len() < half {
                continue;
            }
            let rl = r.letters();
            for v in &variants {
                let u = &v[..half];
                let Some(pos) = find_subword(rl, u) else { continue };
                // r = p u q and u = v-tail^-1 modulo the relator s, so
                // p (tail^-1) q is shorter and equivalent.
                let tail = &v[half..];
                let mut new_letters: Vec<Letter> = Vec::with_capacity(rl.len());
                new_letters.extend_from_slice(&rl[..pos]);
                new_letters.extend(tail.iter().rev().map(|l| l.inverse()));
                new_letters.extend_from_slice(&rl[pos + half..]);
                let alphabet = Arc::clone(relators[ri].alphabet());
                let nw = Word::from_letters(&alphabet, new_letters);
                let (core, _) = nw.cyclically_reduce();
                if core.len() < relators[ri].len() {
                    relators[ri] = core;
                    return true;
                }
            }
        }
    }
    false
}

fn find_subword(haystack: &[Letter], needle: &[Letter]) -> Option<usize> {
    if needle.len() > haystack.len() {
        return None;
    }
    (0..=haystack.len() - needle.len()).find(|&i| &haystack[i..i + needle.len()] == needle)
}
