//! Reduction of an arbitrary weight to a class-contiguous normal form by
//! twisting along simple roots α with (λ, α) ∉ ℤ.
//!
//! The result describes a Levi subalgebra q(n₁) × … × q(n_k) and a weight whose
//! i-th block lies in Λ_{sᵢ^{ℓᵢ}}(nᵢ) with the sᵢ pairwise in different paired
//! classes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coord::{CosetClass, ExactRational};
use crate::error::{Error, Result};
use crate::weight::{Flag, Root, Sign, Weight};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Move {
    pub root: Root,
    pub flag: Flag,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = match self.flag {
            Flag::Typical => "typical",
            Flag::Atypical => "atypical",
        };
        write!(f, "{} {flag}", self.root)
    }
}

/// One Levi factor q(size) with its class and the number ℓ of coordinates
/// in the `+` member of the class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeviBlock<Q: ExactRational> {
    pub size: usize,
    pub class: CosetClass<Q>,
    pub ell: usize,
}

impl<Q: ExactRational> fmt::Display for LeviBlock<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q({}):{} ell={}", self.size, self.class, self.ell)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionResult<Q: ExactRational> {
    pub levi: Vec<LeviBlock<Q>>,
    pub reduced: Weight<Q>,
    pub moves: Vec<Move>,
    pub notes: Vec<String>,
    /// The parity of the composite twisting equivalence is not tracked.
    pub parity_undetermined: bool,
}

impl<Q: ExactRational> ReductionResult<Q> {
    pub fn shape(&self) -> Vec<usize> {
        self.levi.iter().map(|b| b.size).collect()
    }

    pub fn atypical_moves(&self) -> usize {
        self.moves.iter().filter(|m| m.flag == Flag::Atypical).count()
    }
}

fn sort_key(label: (usize, Sign), class: &CosetClass<impl ExactRational>) -> (usize, u8) {
    match (class, label.1) {
        (CosetClass::Irr(_), Sign::Minus) => (label.0, 1),
        _ => (label.0, 0),
    }
}

/// Stable adjacent-swap sort into the order INT, HALF, then the remaining
/// classes by first occurrence, with `+` before `−` inside each of those.
///
/// Every swap crosses two coordinates whose difference is not an integer, so
/// each one is a legal twist; this is checked rather than assumed.
pub fn normalize_block<Q: ExactRational>(lambda: &Weight<Q>) -> Result<ReductionResult<Q>> {
    let sig = lambda.class_signature();
    let mut labels = sig.labels.clone();
    let key = |l: (usize, Sign)| sort_key(l, &sig.classes[l.0]);
    let mut cur = lambda.clone();
    let mut moves = Vec::new();
    let n = lambda.n();
    loop {
        let mut swapped = false;
        for p in 0..n.saturating_sub(1) {
            if key(labels[p]) > key(labels[p + 1]) {
                let root = Root::simple(p);
                if cur.pairing(root).is_integer() {
                    return Err(Error::IllegalMove(format!(
                        "({cur}, {root}) is an integer; twisting is not allowed"
                    )));
                }
                let (next, flag) = cur.star_action(root)?;
                cur = next;
                labels.swap(p, p + 1);
                moves.push(Move { root, flag });
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }

    let mut levi: Vec<LeviBlock<Q>> = Vec::new();
    let mut last: Option<usize> = None;
    for &(class, sign) in &labels {
        if last != Some(class) {
            levi.push(LeviBlock {
                size: 0,
                class: sig.classes[class].clone(),
                ell: 0,
            });
            last = Some(class);
        }
        let block = levi.last_mut().unwrap();
        block.size += 1;
        if sign == Sign::Plus {
            block.ell += 1;
        }
    }

    let mut notes = Vec::new();
    for (k, b) in levi.iter().enumerate() {
        if b.ell == 0 || b.ell == b.size {
            let s = b.class.representative();
            let t = b.class.paired().representative();
            notes.push(format!(
                "block {} q({}): Lambda_{{({s})^{}}}({}) is the same set as Lambda_{{({t})^{}}}({}); \
                 this output uses the first label",
                k + 1,
                b.size,
                b.ell,
                b.size,
                b.size - b.ell,
                b.size
            ));
        }
    }
    notes.push(
        "parity of the composite twisting equivalence is not determined; the reduction holds up to parity change"
            .to_string(),
    );

    Ok(ReductionResult {
        levi,
        reduced: cur,
        moves,
        notes,
        parity_undetermined: true,
    })
}

/// Re-applies a move list, checking legality and flags at every step.
pub fn replay_moves<Q: ExactRational>(lambda: &Weight<Q>, moves: &[Move]) -> Result<Weight<Q>> {
    let mut cur = lambda.clone();
    for (step, m) in moves.iter().enumerate() {
        if !m.root.is_simple() || m.root.j >= cur.n() {
            return Err(Error::IllegalMove(format!("step {step}: {} is not simple in q({})", m.root, cur.n())));
        }
        if cur.pairing(m.root).is_integer() {
            return Err(Error::IllegalMove(format!(
                "step {step}: ({cur}, {}) is an integer",
                m.root
            )));
        }
        let (next, flag) = cur.star_action(m.root)?;
        if flag != m.flag {
            return Err(Error::IllegalMove(format!(
                "step {step}: recorded flag {:?} but the move is {flag:?}",
                m.flag
            )));
        }
        cur = next;
    }
    Ok(cur)
}
