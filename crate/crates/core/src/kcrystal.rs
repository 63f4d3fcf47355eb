//! K-crystal operators on single rows and single columns, K-Demazure
//! crystals, and their Lascoux-polynomial characters.

use crate::crystal::{e_svt, f_svt};
use crate::error::Error;
use crate::perm::Perm;
use crate::poly::{lascoux_polynomial, BetaPolynomial};
use crate::shape::Partition;
use crate::tableaux::{enumerate_svt, SetValuedTableau};
use crate::Result;
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeSet;

/// True for `kΛ_1` (single row) and `Λ_k` (single column) shapes, where the
/// K-crystal operators are defined. Other shapes are rejected loudly: no
/// K-crystal satisfying the expected heuristics exists for them.
pub fn is_row_or_column(shape: &Partition) -> bool {
    shape.rows() <= 1 || shape.part(0) == 1
}

fn check_shape(shape: &Partition) -> Result<()> {
    if is_row_or_column(shape) {
        Ok(())
    } else {
        Err(Error::KShapeUnsupported(shape.parts().to_vec()))
    }
}

/// Excess-raising operator `f_i^K`: null if `i ∉ T` or `i + 1 ∈ T`,
/// otherwise adds `i + 1` to the rightmost box containing `i`.
pub fn f_k(t: &SetValuedTableau, i: u8) -> Result<Option<SetValuedTableau>> {
    check_shape(t.shape())?;
    if !t.contains(i) || t.contains(i + 1) {
        return Ok(None);
    }
    let mut cells = t.rows().to_vec();
    // Rightmost box containing i: scan rows bottom-to-top, cells right-to-left;
    // for a row there may be several boxes with i, for a column at most one.
    let mut target: Option<(usize, usize)> = None;
    for (r, row) in cells.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            if cell.contains(&i) {
                match target {
                    Some((_, tc)) if tc >= c => {}
                    _ => target = Some((r, c)),
                }
            }
        }
    }
    let (r, c) = target.expect("i occurs in T");
    let pos = cells[r][c].binary_search(&(i + 1)).unwrap_err();
    cells[r][c].insert(pos, i + 1);
    Ok(Some(SetValuedTableau::from_parts_unchecked(t.shape().clone(), t.n(), cells)))
}

/// Inverse operator `e_i^K`: deletes `i + 1` from the unique box containing
/// both `i` and `i + 1`, provided the result maps back under `f_i^K`.
pub fn e_k(t: &SetValuedTableau, i: u8) -> Result<Option<SetValuedTableau>> {
    check_shape(t.shape())?;
    let mut found: Option<(usize, usize)> = None;
    for (r, row) in t.rows().iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            if cell.contains(&i) && cell.contains(&(i + 1)) {
                debug_assert!(found.is_none(), "both-letter box is unique");
                found = Some((r, c));
            }
        }
    }
    let (r, c) = match found {
        Some(rc) => rc,
        None => return Ok(None),
    };
    let mut cells = t.rows().to_vec();
    let pos = cells[r][c].binary_search(&(i + 1)).unwrap();
    cells[r][c].remove(pos);
    let candidate = SetValuedTableau::from_parts_unchecked(t.shape().clone(), t.n(), cells);
    if f_k(&candidate, i)?.as_ref() == Some(t) {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}

/// A K-Demazure crystal `svssyt^n_w(λ)` for a single-row or single-column
/// shape, constructed from a reduced word of `w`.
#[derive(Clone, Debug)]
pub struct KDemazureCrystal {
    pub shape: Partition,
    pub n: u8,
    pub word: Vec<usize>,
    nodes: BTreeSet<SetValuedTableau>,
}

impl KDemazureCrystal {
    pub fn nodes(&self) -> impl Iterator<Item = &SetValuedTableau> {
        self.nodes.iter()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, t: &SetValuedTableau) -> bool {
        self.nodes.contains(t)
    }

    pub fn node_set(&self) -> &BTreeSet<SetValuedTableau> {
        &self.nodes
    }
}

/// Builds `svssyt^n_w(λ)` recursively: starting from `{u_λ}`, process the
/// reduced word right to left, replacing `S` by the `f_i`-saturation of
/// `S ∪ f_i^K S` for each letter `i`.
pub fn k_demazure(shape: &Partition, n: u8, word: &[usize]) -> Result<KDemazureCrystal> {
    check_shape(shape)?;
    if let Some(&i) = word.iter().find(|&&i| i == 0 || i >= n as usize) {
        return Err(Error::IndexOutOfRange { index: i, n: n as usize });
    }
    if !crate::poly::ReducedWord(word.to_vec()).is_reduced(n as usize) {
        return Err(Error::NotReduced(word.to_vec()));
    }
    let u = SetValuedTableau::highest_weight(shape, n)?;
    let mut set: BTreeSet<SetValuedTableau> = BTreeSet::new();
    set.insert(u);
    for &i in word.iter().rev() {
        let mut next = set.clone();
        for t in &set {
            if let Some(kt) = f_k(t, i as u8)? {
                next.insert(kt);
            }
        }
        let mut frontier: Vec<SetValuedTableau> = next.iter().cloned().collect();
        while let Some(t) = frontier.pop() {
            if let Some(ft) = f_svt(&t, i as u8) {
                if next.insert(ft.clone()) {
                    frontier.push(ft);
                }
            }
        }
        set = next;
    }
    Ok(KDemazureCrystal { shape: shape.clone(), n, word: word.to_vec(), nodes: set })
}

/// Character `Σ β^excess(T) x^wt(T)` of a K-Demazure crystal.
pub fn k_character(d: &KDemazureCrystal) -> BetaPolynomial {
    let n = d.n as usize;
    let mut out = BetaPolynomial::zero(n);
    for t in d.nodes() {
        let exps: Vec<u32> = t.weight().entries().iter().map(|&e| e as u32).collect();
        out = &out + &BetaPolynomial::monomial(n, t.excess() as u32, &exps, BigInt::one());
    }
    out
}

/// The Lascoux polynomial `L_{wλ}` that property (K.3) pairs with
/// `svssyt^n_w(λ)`.
pub fn lascoux_of_w_lambda(shape: &Partition, n: u8, w: &Perm) -> Result<BetaPolynomial> {
    let a = w.act_composition(&shape.to_composition(n as usize));
    lascoux_polynomial(&a)
}

/// One `i`-K-string: the `i`-string through the head, plus the `i`-string
/// through `f_i^K(head)` when it exists.
#[derive(Clone, Debug)]
pub struct IKString {
    pub head: SetValuedTableau,
    pub top: Vec<SetValuedTableau>,
    pub bottom: Vec<SetValuedTableau>,
}

impl IKString {
    pub fn members(&self) -> impl Iterator<Item = &SetValuedTableau> {
        self.top.iter().chain(self.bottom.iter())
    }
}

/// Partitions `svssyt^n(λ)` into `i`-K-strings.
pub fn i_k_strings(shape: &Partition, n: u8, i: u8) -> Result<Vec<IKString>> {
    check_shape(shape)?;
    let all = enumerate_svt(shape, n, None);
    let mut seen: BTreeSet<SetValuedTableau> = BTreeSet::new();
    let mut strings = Vec::new();
    for t in &all {
        if seen.contains(t) {
            continue;
        }
        // Climb to the head: undo f_i, then f_i^K, as often as possible.
        let mut head = t.clone();
        loop {
            if let Some(up) = e_svt(&head, i) {
                head = up;
            } else if let Some(up) = e_k(&head, i)? {
                head = up;
            } else {
                break;
            }
        }
        let mut top = vec![head.clone()];
        while let Some(next) = f_svt(top.last().unwrap(), i) {
            top.push(next);
        }
        let mut bottom = Vec::new();
        if let Some(kt) = f_k(&head, i)? {
            bottom.push(kt);
            while let Some(next) = f_svt(bottom.last().unwrap(), i) {
                bottom.push(next);
            }
        }
        for m in top.iter().chain(bottom.iter()) {
            let fresh = seen.insert(m.clone());
            if !fresh {
                return Err(Error::msg(format!("node {m} lies in two {i}-K-strings")));
            }
        }
        strings.push(IKString { head, top, bottom });
    }
    if seen.len() != all.len() {
        return Err(Error::msg("i-K-strings do not cover the crystal"));
    }
    Ok(strings)
}
