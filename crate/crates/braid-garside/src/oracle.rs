//! Independent ground-truth implementations used to cross-check the
//! rewriting engine:
//!
//! * the classical Artin action of `B_{n+1}` on a free group of rank
//!   `n + 1`, a faithful representation that decides word equality,
//! * breadth-first closure of a positive word under the defining braid
//!   and commutation relations (both are length-preserving, so classes
//!   are finite), and
//! * a brute-force construction of the Garside `Δ^k · A` form that never
//!   touches the rewriting engine.
//!
//! Everything here is deliberately slow and simple; the engine is checked
//! against these, never the other way around.

use std::collections::{HashSet, VecDeque};

use crate::error::BraidError;
use crate::families::{delta_ladder, e_word};
use crate::normal_form::NormalForm;
use crate::word::{cmp_deglex_slices, Generator, Sign, SignedWord, Word};

/// A freely reduced word in the free group on `x_1 .. x_{n+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeGroupElem {
    letters: Vec<(u16, i8)>,
}

impl FreeGroupElem {
    pub fn identity() -> FreeGroupElem {
        FreeGroupElem {
            letters: Vec::new(),
        }
    }

    pub fn generator(m: u16) -> FreeGroupElem {
        FreeGroupElem {
            letters: vec![(m, 1)],
        }
    }

    pub fn letters(&self) -> &[(u16, i8)] {
        &self.letters
    }

    fn push_reduced(&mut self, letter: (u16, i8)) {
        match self.letters.last() {
            Some(&(m, s)) if m == letter.0 && s == -letter.1 => {
                self.letters.pop();
            }
            _ => self.letters.push(letter),
        }
    }

    fn extend_reduced(&mut self, other: &FreeGroupElem, sign: i8) {
        if sign > 0 {
            for &l in &other.letters {
                self.push_reduced(l);
            }
        } else {
            for &(m, s) in other.letters.iter().rev() {
                self.push_reduced((m, -s));
            }
        }
    }
}

/// An automorphism of the free group, stored as the images of the
/// generators `x_1 .. x_{n+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeGroupAut {
    images: Vec<FreeGroupElem>,
}

impl FreeGroupAut {
    pub fn identity(strands: u16) -> FreeGroupAut {
        FreeGroupAut {
            images: (1..=strands).map(FreeGroupElem::generator).collect(),
        }
    }

    pub fn strands(&self) -> u16 {
        self.images.len() as u16
    }

    pub fn image(&self, m: u16) -> &FreeGroupElem {
        &self.images[(m - 1) as usize]
    }

    /// Applies the automorphism to a free-group word, reducing eagerly.
    pub fn apply(&self, elem: &FreeGroupElem) -> FreeGroupElem {
        let mut out = FreeGroupElem::identity();
        for &(m, s) in &elem.letters {
            out.extend_reduced(self.image(m), s);
        }
        out
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &FreeGroupAut) -> FreeGroupAut {
        FreeGroupAut {
            images: other.images.iter().map(|img| self.apply(img)).collect(),
        }
    }

    /// Extends `self` to `self ∘ φ` where `φ` is the action of a single
    /// signed Artin letter. Only two images change:
    /// `a_i` sends `x_i -> x_i x_{i+1} x_i^{-1}` and `x_{i+1} -> x_i`;
    /// the inverse letter undoes that substitution.
    fn absorb_artin(&mut self, i: u16, positive: bool) {
        let lo = (i - 1) as usize;
        let hi = i as usize;
        let xi = self.images[lo].clone();
        let xi1 = self.images[hi].clone();
        if positive {
            let mut conj = FreeGroupElem::identity();
            conj.extend_reduced(&xi, 1);
            conj.extend_reduced(&xi1, 1);
            conj.extend_reduced(&xi, -1);
            self.images[lo] = conj;
            self.images[hi] = xi;
        } else {
            let mut conj = FreeGroupElem::identity();
            conj.extend_reduced(&xi1, -1);
            conj.extend_reduced(&xi, 1);
            conj.extend_reduced(&xi1, 1);
            self.images[lo] = xi1;
            self.images[hi] = conj;
        }
    }
}

/// Flattens a signed word to signed Artin letters, expanding each delta
/// letter to the ladder word (or its formal inverse).
fn signed_artin_letters(u: &SignedWord) -> Vec<(u16, bool)> {
    let ladder: Vec<u16> = delta_ladder(u.rank(), u.rank())
        .expect("rank validated by SignedWord")
        .letters()
        .iter()
        .map(|g| g.artin_index().unwrap())
        .collect();
    let mut out = Vec::new();
    for l in u.letters() {
        match l.generator.artin_index() {
            Some(i) => out.push((i, l.sign == Sign::Pos)),
            None if l.generator.is_delta() => out.extend(ladder.iter().map(|&i| (i, true))),
            None => out.extend(ladder.iter().rev().map(|&i| (i, false))),
        }
    }
    out
}

/// The automorphism of the free group on `n + 1` generators induced by a
/// signed braid word.
pub fn artin_automorphism(u: &SignedWord) -> FreeGroupAut {
    let mut aut = FreeGroupAut::identity(u.rank() + 1);
    for (i, positive) in signed_artin_letters(u) {
        aut.absorb_artin(i, positive);
    }
    aut
}

/// Equality oracle: two signed words are equal in the braid group iff they
/// induce the same free-group automorphism (the representation is faithful,
/// taken here as classical background).
pub fn oracle_equal(u: &SignedWord, v: &SignedWord) -> Result<bool, BraidError> {
    if u.rank() != v.rank() {
        return Err(BraidError::RankMismatch {
            left: u.rank(),
            right: v.rank(),
        });
    }
    Ok(artin_automorphism(u) == artin_automorphism(v))
}

fn braid_and_commute_neighbors(letters: &[Generator], out: &mut Vec<Vec<Generator>>) {
    out.clear();
    // Far commutations: swap adjacent letters with index gap >= 2.
    for p in 0..letters.len().saturating_sub(1) {
        let x = letters[p].artin_index().unwrap();
        let y = letters[p + 1].artin_index().unwrap();
        if x.abs_diff(y) >= 2 {
            let mut next = letters.to_vec();
            next.swap(p, p + 1);
            out.push(next);
        }
    }
    // Braid moves: x y x -> y x y for adjacent indices.
    for p in 0..letters.len().saturating_sub(2) {
        let x = letters[p].artin_index().unwrap();
        let y = letters[p + 1].artin_index().unwrap();
        let z = letters[p + 2].artin_index().unwrap();
        if x == z && x.abs_diff(y) == 1 {
            let mut next = letters.to_vec();
            next[p] = letters[p + 1];
            next[p + 1] = letters[p];
            next[p + 2] = letters[p + 1];
            out.push(next);
        }
    }
}

/// Breadth-first closure of a positive word under the braid and far
/// commutation relations, applied in both directions at every position.
/// Both relation families preserve length, so the class is finite; `cap`
/// bounds its size. The result is sorted deg-lex ascending.
pub fn positive_class(w: &Word, cap: usize) -> Result<Vec<Word>, BraidError> {
    if !w.is_positive() {
        return Err(BraidError::NotPositive);
    }
    let mut seen: HashSet<Vec<Generator>> = HashSet::new();
    let mut queue: VecDeque<Vec<Generator>> = VecDeque::new();
    seen.insert(w.letters().to_vec());
    queue.push_back(w.letters().to_vec());
    let mut neighbors = Vec::new();
    while let Some(cur) = queue.pop_front() {
        braid_and_commute_neighbors(&cur, &mut neighbors);
        for next in neighbors.drain(..) {
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(BraidError::ClassCapExceeded { cap });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut class: Vec<Vec<Generator>> = seen.into_iter().collect();
    class.sort_by(|a, b| cmp_deglex_slices(a, b));
    Ok(class
        .into_iter()
        .map(|letters| Word::from_checked(w.rank(), letters))
        .collect())
}

/// Deg-lex minimal element of the positive class.
pub fn positive_min_rep(w: &Word, cap: usize) -> Result<Word, BraidError> {
    let class = positive_class(w, cap)?;
    Ok(class.into_iter().next().expect("class contains the seed"))
}

/// Brute-force Garside normal form, built without the rewriting engine:
///
/// 1. replace each `a_i^{-1}` by `Δ^{-1} E_i` and push every delta letter
///    to the front, flipping the index of each Artin letter it crosses
///    (`a_l Δ^{±1} = Δ^{±1} a_{n-l+1}`), leaving `Δ^d · P` with `P`
///    positive;
/// 2. peel copies of the ladder word off `P`: while some member of the
///    positive class of `P` starts with the ladder, strip it and count;
/// 3. return the accumulated exponent and the deg-lex minimal
///    representative of what is left.
///
/// The class search makes this exponential in the positive length; it is
/// comfortable around rank 3 with positive parts up to a dozen letters,
/// which is all the cross-checks need.
pub fn garside_oracle(u: &SignedWord, cap: usize) -> Result<NormalForm, BraidError> {
    let rank = u.rank();
    let ladder = delta_ladder(rank, rank).expect("rank validated");

    // Step 1: a flat list of delta signs and positive letters.
    enum Flat {
        Delta(i64),
        Artin(u16),
    }
    let mut flat = Vec::new();
    for l in u.letters() {
        match l.generator.artin_index() {
            Some(i) => {
                if l.sign == Sign::Pos {
                    flat.push(Flat::Artin(i));
                } else {
                    flat.push(Flat::Delta(-1));
                    for g in e_word(i, rank)?.letters() {
                        flat.push(Flat::Artin(g.artin_index().unwrap()));
                    }
                }
            }
            None if l.generator.is_delta() => flat.push(Flat::Delta(1)),
            None => flat.push(Flat::Delta(-1)),
        }
    }

    // Each Artin letter is flipped once per delta letter to its right.
    let mut exponent: i64 = 0;
    let mut deltas_to_right: u32 = 0;
    let mut positive_rev: Vec<Generator> = Vec::new();
    for item in flat.iter().rev() {
        match *item {
            Flat::Delta(e) => {
                exponent += e;
                deltas_to_right += 1;
            }
            Flat::Artin(i) => {
                let idx = if deltas_to_right % 2 == 1 {
                    rank - i + 1
                } else {
                    i
                };
                positive_rev.push(Generator::artin(idx));
            }
        }
    }
    positive_rev.reverse();
    let mut positive = Word::from_checked(rank, positive_rev);

    // Step 2: peel ladders.
    loop {
        let class = positive_class(&positive, cap)?;
        let peeled = class.iter().find_map(|member| {
            member
                .letters()
                .starts_with(ladder.letters())
                .then(|| Word::from_checked(rank, member.letters()[ladder.len()..].to_vec()))
        });
        match peeled {
            Some(rest) => {
                exponent += 1;
                positive = rest;
            }
            None => break,
        }
    }

    // Step 3: canonical remainder.
    let tail = positive_min_rep(&positive, cap)?;
    NormalForm::new(exponent, tail)
}
