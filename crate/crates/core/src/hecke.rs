//! 0-Hecke words, Hecke column insertion and its reverse, decreasing
//! factorizations, and truncated stable Grothendieck series.

use crate::error::Error;
use crate::perm::{demazure_product, Perm};
use crate::poly::BetaPolynomial;
use crate::tableaux::{IncreasingTableau, SetValuedTableau};
use crate::Result;
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// A two-line array: top row weakly increasing, and within each constant-`k`
/// block the bottom entries strictly decrease left to right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoLineArray {
    pairs: Vec<(u8, u8)>,
}

impl TwoLineArray {
    pub fn new(pairs: Vec<(u8, u8)>) -> Result<Self> {
        for w in pairs.windows(2) {
            let ((k1, a1), (k2, a2)) = (w[0], w[1]);
            if k1 > k2 {
                return Err(Error::InvalidArray("top row must weakly increase".into()));
            }
            if k1 == k2 && a1 <= a2 {
                return Err(Error::InvalidArray(format!(
                    "block {k1} must strictly decrease, got {a1} then {a2}"
                )));
            }
        }
        if pairs.iter().any(|&(k, a)| k == 0 || a == 0) {
            return Err(Error::InvalidArray("entries must be positive".into()));
        }
        Ok(TwoLineArray { pairs })
    }

    pub fn empty() -> Self {
        TwoLineArray { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(u8, u8)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Bottom word read left to right.
    pub fn bottom_word(&self) -> Vec<u8> {
        self.pairs.iter().map(|&(_, a)| a).collect()
    }

    /// Decreasing factorization `(a_{1l_1} ... a_{11}) ... (a_{ml_m} ... a_{m1})`;
    /// factor `k` collects block `k`, empty factors included up to the
    /// largest occupied block.
    pub fn to_decreasing_factorization(&self) -> Vec<Vec<u8>> {
        let m = self.pairs.iter().map(|&(k, _)| k).max().unwrap_or(0) as usize;
        let mut factors = vec![Vec::new(); m];
        for &(k, a) in &self.pairs {
            factors[k as usize - 1].push(a);
        }
        factors
    }

    /// Inverse of [`Self::to_decreasing_factorization`].
    pub fn from_decreasing_factorization(factors: &[Vec<u8>]) -> Result<Self> {
        let mut pairs = Vec::new();
        for (k, factor) in factors.iter().enumerate() {
            for &a in factor {
                pairs.push((k as u8 + 1, a));
            }
        }
        TwoLineArray::new(pairs)
    }

    /// Renders the two rows, e.g. `1 2 2 / 2 2 1`.
    pub fn render(&self) -> String {
        let top: Vec<String> = self.pairs.iter().map(|&(k, _)| k.to_string()).collect();
        let bot: Vec<String> = self.pairs.iter().map(|&(_, a)| a.to_string()).collect();
        format!("{} / {}", top.join(" "), bot.join(" "))
    }

    /// Parses two whitespace rows separated by `/` or a newline.
    pub fn parse(s: &str) -> Result<Self> {
        let lines: Vec<&str> = if s.contains('/') {
            s.splitn(2, '/').collect()
        } else {
            s.trim().splitn(2, '\n').collect()
        };
        if lines.len() != 2 {
            return Err(Error::InvalidArray("expected two rows".into()));
        }
        let parse_row = |row: &str| -> Result<Vec<u8>> {
            row.split_whitespace()
                .map(|t| t.parse::<u8>().map_err(|_| Error::InvalidArray(format!("bad entry {t}"))))
                .collect()
        };
        let top = parse_row(lines[0])?;
        let bot = parse_row(lines[1])?;
        if top.len() != bot.len() {
            return Err(Error::InvalidArray("rows have different lengths".into()));
        }
        TwoLineArray::new(top.into_iter().zip(bot).collect())
    }
}

impl fmt::Display for TwoLineArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A word in the 0-Hecke monoid; equivalence is decided by the Demazure
/// product, or equivalently by the Hecke insertion tableau.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeWord(pub Vec<u8>);

impl HeckeWord {
    /// The 0-Hecke length: the Coxeter length of the Demazure product.
    pub fn hecke_length(&self, n: usize) -> usize {
        self.demazure(n).length()
    }

    pub fn demazure(&self, n: usize) -> Perm {
        let word: Vec<usize> = self.0.iter().map(|&a| a as usize).collect();
        demazure_product(&word, n)
    }
}

fn column_entries(rows: &[Vec<u8>], c: usize) -> Vec<u8> {
    rows.iter().take_while(|row| row.len() > c).map(|row| row[c]).collect()
}

/// Inserts one bottom letter `a` with top letter `k` into `(P, Q)`.
///
/// Returns `false` when the recording step would be structurally
/// inconsistent (`k` already present in the target cell, or the target not
/// a corner); that never happens along a genuine forward insertion but can
/// during the speculative replays of the reverse search.
fn insert_pair(p_rows: &mut Vec<Vec<u8>>, q_cells: &mut Vec<Vec<Vec<u8>>>, k: u8, a: u8) -> bool {
    let mut x = a;
    let mut c = 0usize;
    loop {
        let col = column_entries(p_rows, c);
        if col.iter().all(|&y| x >= y) {
            let h = col.len();
            let row_len = p_rows.get(h).map_or(0, |r| r.len());
            let strictly_bigger = col.last().is_none_or(|&y| x > y);
            let can_append = strictly_bigger && row_len == c && (c == 0 || p_rows[h][c - 1] < x);
            if can_append {
                if h == p_rows.len() {
                    p_rows.push(Vec::new());
                    q_cells.push(Vec::new());
                }
                p_rows[h].push(x);
                q_cells[h].push(vec![k]);
            } else {
                // No box is added; k joins the corner of the row holding
                // the bottom entry of this column.
                let r0 = h - 1;
                let corner = q_cells[r0].len() - 1;
                if p_rows.get(r0 + 1).map_or(0, |r| r.len()) > corner {
                    return false;
                }
                let cell = &mut q_cells[r0][corner];
                match cell.binary_search(&k) {
                    Ok(_) => return false,
                    Err(pos) => cell.insert(pos, k),
                }
            }
            return true;
        }
        // Bump the smallest entry larger than x.
        let r = (0..col.len()).find(|&r| col[r] > x).unwrap();
        let y = p_rows[r][c];
        let above_ok = r == 0 || p_rows[r - 1][c] < x;
        let left_ok = c == 0 || p_rows[r][c - 1] < x;
        if above_ok && left_ok {
            p_rows[r][c] = x;
        }
        x = y;
        c += 1;
    }
}

/// Hecke column insertion of a two-line array.
pub fn hecke_insert(array: &TwoLineArray) -> (IncreasingTableau, SetValuedTableau) {
    let mut p_rows: Vec<Vec<u8>> = Vec::new();
    let mut q_cells: Vec<Vec<Vec<u8>>> = Vec::new();
    for &(k, a) in array.pairs() {
        let ok = insert_pair(&mut p_rows, &mut q_cells, k, a);
        debug_assert!(ok, "forward insertion is always consistent");
    }
    let p = IncreasingTableau::new(p_rows).expect("insertion keeps P increasing");
    let n = array.pairs().iter().map(|&(k, _)| k).max().unwrap_or(1);
    let shape = p.shape.clone();
    let q = SetValuedTableau::new(shape, n, q_cells).expect("recording tableau is set-valued");
    (p, q)
}

// Reverse search strategy: each undo step proposes predecessor states by
// walking the committed bump chain backwards with branching (for a merge,
// over every plausible terminating column), and validates each candidate by
// exact forward replay. The array-level bijection makes the completed
// reconstruction unique; backtracking covers transient ambiguity.

/// Walks a committed bump chain backwards from column `cols` (exclusive),
/// collecting candidate `(pre-insertion P, inserted letter)` pairs.
fn unbump_states(p: &Vec<Vec<u8>>, carried: u8, cols: usize, out: &mut Vec<(Vec<Vec<u8>>, u8)>) {
    if cols == 0 {
        out.push((p.clone(), carried));
        return;
    }
    let c = cols - 1;
    let col = column_entries(p, c);
    // The forward step may have replaced its bump target: the slot now holds
    // the incoming letter, the largest entry below the carried value.
    if let Some(r) = (0..col.len()).rev().find(|&r| col[r] < carried) {
        let below_ok = col.get(r + 1).is_none_or(|&v| v > carried);
        let right_ok = p[r].len() <= c + 1 || p[r][c + 1] > carried;
        if below_ok && right_ok {
            let mut p2 = p.clone();
            let x = std::mem::replace(&mut p2[r][c], carried);
            unbump_states(&p2, x, c, out);
        }
    }
    // Or the replacement failed and the column kept the carried value; the
    // incoming letter is then only pinned to the gap below it.
    if col.contains(&carried) {
        let z = (0..col.len()).rev().find(|&r| col[r] < carried).map_or(1, |r| col[r]);
        for x in z..carried {
            unbump_states(p, x, c, out);
        }
    }
}

/// Reverse Hecke insertion: recovers the unique two-line array mapping to
/// `(P, Q)`, or errors when the pair is outside the bijection's image.
pub fn hecke_reverse(p: &IncreasingTableau, q: &SetValuedTableau) -> Result<TwoLineArray> {
    if p.shape != *q.shape() {
        return Err(Error::NotInsertionImage("P and Q have different shapes".into()));
    }
    q.validate().map_err(|e| Error::NotInsertionImage(e.to_string()))?;
    let mut acc: Vec<(u8, u8)> = Vec::new();
    let p_rows: Vec<Vec<u8>> = p.cells.clone();
    let q_cells: Vec<Vec<Vec<u8>>> = q.rows().to_vec();
    if !reverse_all(&p_rows, &q_cells, &mut acc) {
        return Err(Error::NotInsertionImage(format!("no array inserts to (P, Q) = ({p}, {q})")));
    }
    acc.reverse();
    let array = TwoLineArray::new(acc)?;
    // Safety net: the round trip must reproduce the input exactly.
    let (p2, q2) = hecke_insert(&array);
    if p2.cells != p.cells || q2.rows() != q.rows() {
        return Err(Error::NotInsertionImage("round trip mismatch".into()));
    }
    Ok(array)
}

fn reverse_all(p_rows: &Vec<Vec<u8>>, q_cells: &Vec<Vec<Vec<u8>>>, acc: &mut Vec<(u8, u8)>) -> bool {
    let Some(k) = q_cells.iter().flatten().flat_map(|cell| cell.iter().copied()).max() else {
        return true;
    };
    let max_letter = p_rows.iter().flatten().copied().max().unwrap_or(0);
    // Boxes of Q containing k, rightmost column first (the chronological
    // order of recording cells within a block increases in column).
    let mut boxes: Vec<(usize, usize)> = Vec::new();
    for (r, row) in q_cells.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            if cell.contains(&k) {
                boxes.push((r, c));
            }
        }
    }
    boxes.sort_by_key(|b| std::cmp::Reverse(b.1));
    for (r, c) in boxes {
        let is_corner = p_rows[r].len() == c + 1 && p_rows.get(r + 1).map_or(0, |row| row.len()) <= c;
        if q_cells[r][c].len() == 1 && is_corner {
            // Undo a new-box insertion: strip the box, then walk the bump
            // chain back through the columns left of it.
            let mut p2 = p_rows.clone();
            let mut q2 = q_cells.clone();
            let appended = p2[r].pop().unwrap();
            q2[r].pop();
            if p2[r].is_empty() {
                p2.pop();
                q2.pop();
            }
            let mut states = Vec::new();
            unbump_states(&p2, appended, c, &mut states);
            for (p0, a) in states {
                if try_candidate(p_rows, q_cells, &p0, &q2, k, a, acc) {
                    return true;
                }
            }
        } else if q_cells[r][c].len() > 1 && p_rows[r].len() == c + 1 {
            // Undo a merge into an existing corner: the insertion terminated
            // at some column whose bottom entry sits in row r, with a carried
            // value at least that entry; the bump chain left of it committed.
            let mut q2 = q_cells.clone();
            let pos = q2[r][c].binary_search(&k).unwrap();
            q2[r][c].remove(pos);
            for term_col in (0..p_rows[0].len()).rev() {
                let col = column_entries(p_rows, term_col);
                if col.len() != r + 1 {
                    continue;
                }
                let bottom = *col.last().unwrap();
                for x in bottom..=max_letter {
                    let mut states = Vec::new();
                    unbump_states(p_rows, x, term_col, &mut states);
                    for (p0, a) in states {
                        if try_candidate(p_rows, q_cells, &p0, &q2, k, a, acc) {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// Checks a candidate undo by replaying the forward insertion, then recurses.
fn try_candidate(
    p_rows: &Vec<Vec<u8>>,
    q_cells: &Vec<Vec<Vec<u8>>>,
    p2: &Vec<Vec<u8>>,
    q2: &Vec<Vec<Vec<u8>>>,
    k: u8,
    a: u8,
    acc: &mut Vec<(u8, u8)>,
) -> bool {
    // acc holds later pairs; within a block the earlier letter must be
    // strictly larger, and top letters weakly increase along the array.
    if let Some(&(k_prev, a_prev)) = acc.last() {
        if k_prev < k || (k_prev == k && a <= a_prev) {
            return false;
        }
    }
    let mut p_check = p2.clone();
    let mut q_check = q2.clone();
    if !insert_pair(&mut p_check, &mut q_check, k, a) {
        return false;
    }
    if p_check != *p_rows || q_check != *q_cells {
        return false;
    }
    acc.push((k, a));
    if reverse_all(p2, q2, acc) {
        return true;
    }
    acc.pop();
    false
}

/// Insertion tableau of a word read as an array with distinct top letters.
///
/// Note this is *not* constant on 0-Hecke classes (the equivalent words
/// `[1,3]` and `[3,1]` insert to a column and a row); use
/// [`hecke_equivalent`] to decide equivalence.
pub fn hecke_insertion_tableau(word: &[u8]) -> IncreasingTableau {
    let pairs: Vec<(u8, u8)> = word.iter().enumerate().map(|(i, &a)| (i as u8 + 1, a)).collect();
    let array = TwoLineArray::new(pairs).expect("distinct top letters always valid");
    hecke_insert(&array).0
}

/// Decides 0-Hecke equivalence of two words over letters `< n` via their
/// Demazure products.
pub fn hecke_equivalent(w1: &[u8], w2: &[u8], n: usize) -> bool {
    HeckeWord(w1.to_vec()).demazure(n) == HeckeWord(w2.to_vec()).demazure(n)
}

/// All two-line arrays with bottom letters in `1..=max_letter`, top letters
/// in `1..=m`, and length at most `max_len`.
pub fn enumerate_arrays(max_letter: u8, m: u8, max_len: usize) -> Vec<TwoLineArray> {
    // Per block: a strictly decreasing sequence = any subset, read downward.
    let mut block_choices: Vec<Vec<Vec<u8>>> = Vec::new();
    let subsets: Vec<Vec<u8>> = {
        let mut subs = vec![Vec::new()];
        for mask in 1u32..(1 << max_letter) {
            let mut s: Vec<u8> =
                (1..=max_letter).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
            s.reverse();
            subs.push(s);
        }
        subs
    };
    block_choices.resize(m as usize, subsets);
    fn rec(
        blocks: &[Vec<Vec<u8>>],
        k: usize,
        len: usize,
        max_len: usize,
        pairs: &mut Vec<(u8, u8)>,
        out: &mut Vec<TwoLineArray>,
    ) {
        if k == blocks.len() {
            if !pairs.is_empty() {
                out.push(TwoLineArray::new(pairs.clone()).unwrap());
            }
            return;
        }
        for choice in &blocks[k] {
            if len + choice.len() > max_len {
                continue;
            }
            for &a in choice {
                pairs.push((k as u8 + 1, a));
            }
            rec(blocks, k + 1, len + choice.len(), max_len, pairs, out);
            for _ in choice {
                pairs.pop();
            }
        }
    }
    let mut pairs = Vec::new();
    let mut out = Vec::new();
    rec(&block_choices, 0, 0, max_len, &mut pairs, &mut out);
    out
}

/// Truncation of the stable Grothendieck series `G_w(x) = Σ β^{l(a)-l(w)} x^k`
/// over arrays whose bottom word is 0-Hecke equivalent to `w`, with top
/// letters at most `m` and length at most `max_len`.
pub fn stable_grothendieck_truncated(word: &[u8], m: u8, max_len: usize) -> Result<BetaPolynomial> {
    let n = word.iter().copied().max().unwrap_or(0) as usize + 1;
    let w = HeckeWord(word.to_vec()).demazure(n);
    if w.length() != word.len() {
        return Err(Error::NotReduced(word.iter().map(|&v| v as usize).collect()));
    }
    if max_len < word.len() {
        return Err(Error::msg("max_len must be at least the length of w"));
    }
    let support: Vec<u8> = {
        let mut s: Vec<u8> = w.reduced_word().iter().map(|&i| i as u8).collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    let max_letter = support.last().copied().unwrap_or(0);
    let mut out = BetaPolynomial::zero(m as usize);
    for array in enumerate_arrays(max_letter, m, max_len) {
        let bottom = HeckeWord(array.bottom_word());
        if bottom.0.iter().any(|a| !support.contains(a)) {
            continue;
        }
        if bottom.demazure(n) != w {
            continue;
        }
        let mut exps = vec![0u32; m as usize];
        for &(k, _) in array.pairs() {
            exps[k as usize - 1] += 1;
        }
        let beta = (array.len() - word.len()) as u32;
        out = &out + &BetaPolynomial::monomial(m as usize, beta, &exps, BigInt::one());
    }
    // The identity word contributes the empty array: G_id = 1.
    if word.is_empty() {
        out = &out + &BetaPolynomial::one(m as usize);
    }
    Ok(out)
}
