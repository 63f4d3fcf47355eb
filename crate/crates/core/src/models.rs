//! Excited Young diagrams and marked Gelfand–Tsetlin patterns: alternative
//! models for set-valued tableaux and Grothendieck polynomials.

use crate::error::Error;
use crate::shape::{Partition, SkewShape, WeakComposition};
use crate::tableaux::SetValuedTableau;
use crate::Result;
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

/// An excited Young diagram: a set of boxes in the `n × (λ_1 + n)` rectangle
/// reachable from the Young diagram of `λ` by elementary excitations.
/// Cells are 1-based `(row, col)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct ExcitedYoungDiagram {
    pub n: u8,
    pub lambda: Partition,
    pub cells: BTreeSet<(usize, usize)>,
}

impl ExcitedYoungDiagram {
    /// The ground state: the diagram of `λ` itself.
    pub fn ground(lambda: &Partition, n: u8) -> Self {
        let cells = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
            .collect();
        ExcitedYoungDiagram { n, lambda: lambda.clone(), cells }
    }

    fn max_col(&self) -> usize {
        self.lambda.part(0) + self.n as usize
    }

    fn has(&self, r: usize, c: usize) -> bool {
        self.cells.contains(&(r, c))
    }

    fn in_bounds(&self, r: usize, c: usize) -> bool {
        r >= 1 && r <= self.n as usize && c >= 1 && c <= self.max_col()
    }
}

impl fmt::Display for ExcitedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.cells.iter().map(|(r, c)| format!("({r},{c})")).collect();
        write!(f, "{{{}}}", cells.join(","))
    }
}

/// The four elementary move patterns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveType {
    Type1,
    Type1Prime,
    Type2,
    Type2Prime,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveDirection {
    Excite,
    Emit,
}

/// Applies one elementary excitation or emission at `cell`; `None` when the
/// local pattern does not match.
pub fn elementary_move(
    e: &ExcitedYoungDiagram,
    cell: (usize, usize),
    ty: MoveType,
    dir: MoveDirection,
) -> Option<ExcitedYoungDiagram> {
    let (r, c) = cell;
    if !e.has(r, c) {
        return None;
    }
    let absent = |r: usize, c: usize| e.in_bounds(r, c) && !e.has(r, c);
    let present = |r: usize, c: usize| e.has(r, c);
    let mut cells = e.cells.clone();
    match (ty, dir) {
        (MoveType::Type1, MoveDirection::Excite) => {
            if absent(r, c + 1) && absent(r + 1, c) && absent(r + 1, c + 1) {
                cells.remove(&(r, c));
                cells.insert((r + 1, c + 1));
            } else {
                return None;
            }
        }
        (MoveType::Type1, MoveDirection::Emit) => {
            if r > 1 && c > 1 && absent(r - 1, c - 1) && absent(r - 1, c) && absent(r, c - 1) {
                cells.remove(&(r, c));
                cells.insert((r - 1, c - 1));
            } else {
                return None;
            }
        }
        (MoveType::Type1Prime, MoveDirection::Excite) => {
            if c > 1
                && present(r, c - 1)
                && present(r + 1, c + 1)
                && absent(r, c + 1)
                && absent(r + 1, c - 1)
                && absent(r + 1, c)
            {
                cells.remove(&(r, c));
                cells.insert((r + 1, c));
            } else {
                return None;
            }
        }
        (MoveType::Type1Prime, MoveDirection::Emit) => {
            if r > 1
                && c > 1
                && present(r - 1, c - 1)
                && present(r, c + 1)
                && absent(r - 1, c)
                && absent(r - 1, c + 1)
                && absent(r, c - 1)
            {
                cells.remove(&(r, c));
                cells.insert((r - 1, c));
            } else {
                return None;
            }
        }
        (MoveType::Type2, MoveDirection::Excite) => {
            if absent(r, c + 1) && absent(r + 1, c) && absent(r + 1, c + 1) {
                cells.insert((r + 1, c + 1));
            } else {
                return None;
            }
        }
        (MoveType::Type2, MoveDirection::Emit) => {
            if r > 1 && c > 1 && present(r - 1, c - 1) && absent(r - 1, c) && absent(r, c - 1) {
                cells.remove(&(r, c));
            } else {
                return None;
            }
        }
        (MoveType::Type2Prime, MoveDirection::Excite) => {
            if present(r, c + 1) && absent(r + 1, c) && absent(r + 1, c + 1) {
                cells.insert((r + 1, c));
            } else {
                return None;
            }
        }
        (MoveType::Type2Prime, MoveDirection::Emit) => {
            if r > 1 && present(r - 1, c) && present(r - 1, c + 1) && absent(r, c + 1) {
                cells.remove(&(r, c));
            } else {
                return None;
            }
        }
    }
    Some(ExcitedYoungDiagram { n: e.n, lambda: e.lambda.clone(), cells })
}

/// The bijection `Θ(T) = {(i, i + c - r) : i ∈ T(r, c)}`.
pub fn theta(t: &SetValuedTableau) -> ExcitedYoungDiagram {
    let mut cells = BTreeSet::new();
    for (r, row) in t.rows().iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            for &v in cell {
                let i = v as usize;
                // Column strictness gives v > r, so the column is positive.
                let col = (i as isize + c as isize - r as isize) as usize;
                cells.insert((i, col));
            }
        }
    }
    ExcitedYoungDiagram { n: t.n(), lambda: t.shape().clone(), cells }
}

/// Inverse of `Θ`: reconstructs the tableau by splitting each diagonal's
/// letters among the boxes of `λ` on that diagonal (backtracking; the valid
/// split is unique because `Θ` is a bijection).
pub fn theta_inverse(e: &ExcitedYoungDiagram) -> Result<SetValuedTableau> {
    let lambda = &e.lambda;
    let n = e.n;
    // Letters per diagonal d = c - i (can be negative in principle, but boxes
    // of a straight shape have d = col - row >= -(rows - 1)).
    let mut diagonals: std::collections::BTreeMap<isize, Vec<u8>> = Default::default();
    for &(i, c) in &e.cells {
        diagonals.entry(c as isize - i as isize).or_default().push(i as u8);
    }
    for letters in diagonals.values_mut() {
        letters.sort_unstable();
    }
    // Boxes of λ per diagonal, top to bottom.
    let mut boxes: std::collections::BTreeMap<isize, Vec<(usize, usize)>> = Default::default();
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            boxes.entry(c as isize - r as isize).or_default().push((r, c));
        }
    }
    if diagonals.keys().any(|d| !boxes.contains_key(d)) || boxes.keys().any(|d| !diagonals.contains_key(d)) {
        return Err(Error::msg(format!("cell set does not project onto the diagonals of {lambda}")));
    }
    let keys: Vec<isize> = boxes.keys().copied().collect();
    let mut cells: Vec<Vec<Vec<u8>>> =
        lambda.parts().iter().map(|&len| vec![Vec::new(); len]).collect();
    fn ok_so_far(cells: &[Vec<Vec<u8>>], r: usize, c: usize) -> bool {
        let cell = &cells[r][c];
        if cell.is_empty() {
            return false;
        }
        if c > 0 && !cells[r][c - 1].is_empty() && cells[r][c - 1].last().unwrap() > &cell[0] {
            return false;
        }
        if r > 0 && c < cells[r - 1].len() && !cells[r - 1][c].is_empty() && cells[r - 1][c].last().unwrap() >= &cell[0] {
            return false;
        }
        true
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        keys: &[isize],
        k: usize,
        boxes: &std::collections::BTreeMap<isize, Vec<(usize, usize)>>,
        diagonals: &std::collections::BTreeMap<isize, Vec<u8>>,
        cells: &mut Vec<Vec<Vec<u8>>>,
        done: &mut Option<Vec<Vec<Vec<u8>>>>,
    ) {
        if done.is_some() {
            return;
        }
        if k == keys.len() {
            *done = Some(cells.clone());
            return;
        }
        let d = keys[k];
        let bs = &boxes[&d];
        let ls = &diagonals[&d];
        // Split ls into bs.len() consecutive nonempty groups.
        #[allow(clippy::too_many_arguments)]
        fn split(
            bs: &[(usize, usize)],
            ls: &[u8],
            bi: usize,
            start: usize,
            keys: &[isize],
            k: usize,
            boxes: &std::collections::BTreeMap<isize, Vec<(usize, usize)>>,
            diagonals: &std::collections::BTreeMap<isize, Vec<u8>>,
            cells: &mut Vec<Vec<Vec<u8>>>,
            done: &mut Option<Vec<Vec<Vec<u8>>>>,
        ) {
            if done.is_some() {
                return;
            }
            if bi == bs.len() {
                if start == ls.len() {
                    rec(keys, k + 1, boxes, diagonals, cells, done);
                }
                return;
            }
            let remaining_boxes = bs.len() - bi - 1;
            let max_take = ls.len() - start - remaining_boxes;
            for take in 1..=max_take {
                let (r, c) = bs[bi];
                cells[r][c] = ls[start..start + take].to_vec();
                if ok_so_far(cells, r, c) {
                    split(bs, ls, bi + 1, start + take, keys, k, boxes, diagonals, cells, done);
                }
                cells[r][c].clear();
                if done.is_some() {
                    return;
                }
            }
        }
        if ls.len() < bs.len() {
            return;
        }
        split(bs, ls, 0, 0, keys, k, boxes, diagonals, cells, done);
    }
    let mut done = None;
    rec(&keys, 0, &boxes, &diagonals, &mut cells, &mut done);
    match done {
        Some(cells) => SetValuedTableau::new(lambda.clone(), n, cells),
        None => Err(Error::msg(format!("no valid tableau reconstructs {e}"))),
    }
}

/// Enumerates `EYD^n(λ)`: closure of the ground state under Type 1 and
/// Type 2 excitations.
pub fn enumerate_eyd(lambda: &Partition, n: u8) -> Vec<ExcitedYoungDiagram> {
    if lambda.rows() > n as usize {
        return Vec::new();
    }
    let ground = ExcitedYoungDiagram::ground(lambda, n);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(ground.clone());
    queue.push_back(ground);
    while let Some(e) = queue.pop_front() {
        for &cell in &e.cells {
            for ty in [MoveType::Type1, MoveType::Type2] {
                if let Some(next) = elementary_move(&e, cell, ty, MoveDirection::Excite) {
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Crystal operator on excited Young diagrams: the signature reads rows `i`
/// and `i + 1` left to right. A row-`i` cell contributes `+` when its
/// tableau column holds no `i + 1`, i.e. neither `(i+1, c)` nor
/// `(i+1, c+1)` is occupied; a row-`(i+1)` cell contributes `-` when
/// neither `(i, c-1)` nor `(i, c)` is occupied. After cancelling `-+`
/// pairs, `f_i` performs the Type 1 excitation at the rightmost surviving
/// `+`, or the Type 1' excitation of its right neighbour when that cell is
/// occupied; `e_i` acts dually at the leftmost surviving `-`.
pub fn eyd_crystal_op(e: &ExcitedYoungDiagram, i: u8, lower: bool) -> Option<ExcitedYoungDiagram> {
    let i = i as usize;
    let has = |r: usize, c: usize| c >= 1 && e.has(r, c);
    let mut events: Vec<(usize, i8)> = Vec::new();
    for &(r, c) in &e.cells {
        if r == i {
            if !has(i + 1, c) && !has(i + 1, c + 1) {
                events.push((c, 1));
            }
        } else if r == i + 1
            && !has(i, c.wrapping_sub(1)) && !has(i, c) {
                events.push((c, -1));
            }
    }
    events.sort_by_key(|&(c, _)| c);
    let mut plus: Vec<usize> = Vec::new();
    let mut minus: Vec<usize> = Vec::new();
    for (c, sign) in events {
        if sign > 0 {
            if minus.is_empty() {
                plus.push(c);
            } else {
                minus.pop();
            }
        } else {
            minus.push(c);
        }
    }
    if lower {
        let &c = plus.last()?;
        if has(i, c + 1) {
            elementary_move(e, (i, c + 1), MoveType::Type1Prime, MoveDirection::Excite)
        } else {
            elementary_move(e, (i, c), MoveType::Type1, MoveDirection::Excite)
        }
    } else {
        let &c = minus.first()?;
        if has(i + 1, c - 1) {
            elementary_move(e, (i + 1, c - 1), MoveType::Type1Prime, MoveDirection::Emit)
        } else {
            elementary_move(e, (i + 1, c), MoveType::Type1, MoveDirection::Emit)
        }
    }
}

/// A Gelfand–Tsetlin pattern with marks: a chain
/// `∅ = λ(0) ⊆ λ(1) ⊆ ... ⊆ λ(n) = λ` of horizontal strips, plus marked
/// entries `(i, j)` (1-based row `i` of `λ(j)`), allowed exactly when
/// `λ(j)_{i+1} < λ(j-1)_i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct MarkedGTPattern {
    /// `chain[j]` is `λ(j)`; `chain[0]` is empty, `chain[n] = λ`.
    pub chain: Vec<Partition>,
    /// Marks `(i, j)` with `1 <= i`, `2 <= j <= n`.
    pub marks: BTreeSet<(usize, usize)>,
}

impl MarkedGTPattern {
    pub fn n(&self) -> usize {
        self.chain.len() - 1
    }

    /// True when `(i, j)` may carry a mark.
    pub fn markable(chain: &[Partition], i: usize, j: usize) -> bool {
        j >= 2 && j < chain.len() && i >= 1 && chain[j].part(i) < chain[j - 1].part(i - 1)
    }

    pub fn validate(&self) -> Result<()> {
        if self.chain.is_empty() || !self.chain[0].is_empty() {
            return Err(Error::msg("chain must start at the empty partition"));
        }
        for j in 1..self.chain.len() {
            let skew = SkewShape::new(self.chain[j].clone(), self.chain[j - 1].clone())?;
            if !skew.is_horizontal_strip() {
                return Err(Error::msg(format!("step {j} is not a horizontal strip")));
            }
        }
        for &(i, j) in &self.marks {
            if !Self::markable(&self.chain, i, j) {
                return Err(Error::msg(format!("mark ({i},{j}) is not allowed")));
            }
        }
        Ok(())
    }

    /// Number of markable entries in row `j`.
    pub fn markable_count(chain: &[Partition], j: usize) -> usize {
        (1..=chain[j].rows()).filter(|&i| Self::markable(chain, i, j)).count()
    }

    pub fn weight(&self) -> WeakComposition {
        let n = self.n();
        let mut w = vec![0usize; n];
        for j in 1..=n {
            w[j - 1] = self.chain[j].size() - self.chain[j - 1].size()
                + self.marks.iter().filter(|&&(_, jj)| jj == j).count();
        }
        WeakComposition::new(w)
    }

    /// Triangular ASCII rendering, top row `λ(n)`, marked entries boxed.
    pub fn ascii(&self) -> String {
        let n = self.n();
        let mut lines = Vec::new();
        for j in (1..=n).rev() {
            let row = n - j;
            let mut parts = Vec::new();
            for i in 1..=j {
                let v = self.chain[j].part(i - 1);
                if self.marks.contains(&(i, j)) {
                    parts.push(format!("[{v}]"));
                } else {
                    parts.push(format!(" {v} "));
                }
            }
            lines.push(format!("{}{}", "  ".repeat(row), parts.join(" ")));
        }
        lines.join("\n")
    }
}

/// Enumerates all marked GT patterns with top row `λ` and `n` chain steps.
pub fn enumerate_marked_gt(lambda: &Partition, n: u8) -> Vec<MarkedGTPattern> {
    let mut chains: Vec<Vec<Partition>> = vec![vec![lambda.clone()]];
    // Build chains downward: λ(n) = λ, each predecessor a horizontal strip.
    for _ in 0..n {
        let mut next = Vec::new();
        for chain in &chains {
            let top = chain.last().unwrap();
            for mu in top.subpartitions() {
                let skew = SkewShape::new(top.clone(), mu.clone()).unwrap();
                if skew.is_horizontal_strip() {
                    let mut c = chain.clone();
                    c.push(mu);
                    next.push(c);
                }
            }
        }
        chains = next;
    }
    let mut out = Vec::new();
    for mut chain in chains {
        if !chain.last().unwrap().is_empty() {
            continue;
        }
        chain.reverse();
        // Decorate with all subsets of markable entries.
        let markable: Vec<(usize, usize)> = (2..=n as usize)
            .flat_map(|j| {
                let chain = &chain;
                (1..=chain[j - 1].rows().max(chain[j].rows()))
                    .filter(move |&i| MarkedGTPattern::markable(chain, i, j))
                    .map(move |i| (i, j))
            })
            .collect();
        for mask in 0u64..(1 << markable.len()) {
            let marks: BTreeSet<(usize, usize)> = markable
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &m)| m)
                .collect();
            out.push(MarkedGTPattern { chain: chain.clone(), marks });
        }
    }
    out.sort();
    out
}

/// The weight-preserving bijection onto set-valued tableaux: step `j` fills
/// the strip `λ(j)/λ(j-1)` with `j`, and each mark `(i, j)` adds a `j` to the
/// rightmost box of row `i` as it was before the strip.
pub fn marked_gt_to_svt(p: &MarkedGTPattern, n: u8) -> Result<SetValuedTableau> {
    p.validate()?;
    if p.n() != n as usize {
        return Err(Error::msg("pattern height differs from n"));
    }
    let lambda = p.chain.last().unwrap().clone();
    let mut cells: Vec<Vec<Vec<u8>>> =
        lambda.parts().iter().map(|&len| vec![Vec::new(); len]).collect();
    for j in 1..=p.n() {
        for &(i, jj) in &p.marks {
            if jj == j {
                let row = i - 1;
                let col = p.chain[j - 1].part(row);
                debug_assert!(col > 0);
                cells[row][col - 1].push(j as u8);
            }
        }
        for (row, cells_row) in cells.iter_mut().enumerate().take(p.chain[j].rows()) {
            let (lo, hi) = (p.chain[j - 1].part(row), p.chain[j].part(row));
            for cell in &mut cells_row[lo..hi] {
                cell.push(j as u8);
            }
        }
    }
    SetValuedTableau::new(lambda, n, cells)
}

/// Inverse of [`marked_gt_to_svt`].
pub fn svt_to_marked_gt(t: &SetValuedTableau) -> MarkedGTPattern {
    let n = t.n() as usize;
    let mut chain = Vec::with_capacity(n + 1);
    chain.push(Partition::empty());
    for j in 1..=n {
        let parts: Vec<usize> = t
            .rows()
            .iter()
            .map(|row| row.iter().filter(|cell| cell[0] <= j as u8).count())
            .collect();
        chain.push(Partition::new(parts).expect("restriction is a partition"));
    }
    let mut marks = BTreeSet::new();
    for (r, row) in t.rows().iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            for &v in &cell[1..] {
                debug_assert_eq!(chain[v as usize - 1].part(r), c + 1);
                marks.insert((r + 1, v as usize));
            }
        }
    }
    MarkedGTPattern { chain, marks }
}

/// `G_λ` computed from marked GT patterns, in both forms: the plain marked
/// sum and the Tokuyama-style product `Σ_Λ x^wt(Λ) Π_j (1 + β x_j)^{m_j(Λ)}`.
/// The two must agree; their common value is returned.
pub fn grothendieck_via_gt(lambda: &Partition, n: u8) -> Result<crate::poly::BetaPolynomial> {
    use crate::poly::BetaPolynomial;
    let nn = n as usize;
    let patterns = enumerate_marked_gt(lambda, n);
    let mut marked_sum = BetaPolynomial::zero(nn);
    let mut seen_chains: BTreeSet<Vec<Partition>> = BTreeSet::new();
    for p in &patterns {
        let exps: Vec<u32> = p.weight().entries().iter().map(|&e| e as u32).collect();
        marked_sum = &marked_sum
            + &BetaPolynomial::monomial(nn, p.marks.len() as u32, &exps, BigInt::one());
        seen_chains.insert(p.chain.clone());
    }
    let mut product_form = BetaPolynomial::zero(nn);
    for chain in &seen_chains {
        let mut base = vec![0u32; nn];
        for j in 1..=nn {
            base[j - 1] = (chain[j].size() - chain[j - 1].size()) as u32;
        }
        let mut term = BetaPolynomial::monomial(nn, 0, &base, BigInt::one());
        for j in 1..=nn {
            let m = MarkedGTPattern::markable_count(chain, j);
            for _ in 0..m {
                let mut xj = vec![0u32; nn];
                xj[j - 1] = 1;
                let factor = &BetaPolynomial::one(nn)
                    + &BetaPolynomial::monomial(nn, 1, &xj, BigInt::one());
                term = &term * &factor;
            }
        }
        product_form = &product_form + &term;
    }
    if marked_sum != product_form {
        return Err(Error::msg("marked-sum and product forms disagree"));
    }
    Ok(marked_sum)
}
