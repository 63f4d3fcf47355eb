//! Crystal operators on set-valued tableaux, crystal graphs, and the
//! classical and K-theoretic involutions.

use crate::error::Error;
use crate::shape::Partition;
use crate::tableaux::{enumerate_svt, SetValuedTableau};
use crate::Result;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Signs surviving cancellation, as 0-based column indices of the shape.
///
/// `plus` lists the columns of uncancelled `+` left to right (`φ_i` many),
/// `minus` the columns of uncancelled `-` (`ε_i` many).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Signature {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

/// Column signature of `T` at index `i`: a column contributes `+` if it
/// contains `i` but not `i + 1`, `-` if `i + 1` but not `i`; then `-+`
/// pairs cancel.
pub fn signature(t: &SetValuedTableau, i: u8) -> Signature {
    debug_assert!(i >= 1 && i < t.n());
    let cols = t.shape().part(0);
    let mut plus = Vec::new();
    let mut minus_stack = Vec::new();
    for c in 0..cols {
        let mut has_i = false;
        let mut has_i1 = false;
        for row in t.rows() {
            if c < row.len() {
                has_i |= row[c].contains(&i);
                has_i1 |= row[c].contains(&(i + 1));
            }
        }
        match (has_i, has_i1) {
            (true, false) => {
                if minus_stack.is_empty() {
                    plus.push(c);
                } else {
                    minus_stack.pop();
                }
            }
            (false, true) => minus_stack.push(c),
            _ => {}
        }
    }
    Signature { plus, minus: minus_stack }
}

pub fn phi(t: &SetValuedTableau, i: u8) -> usize {
    signature(t, i).plus.len()
}

pub fn epsilon(t: &SetValuedTableau, i: u8) -> usize {
    signature(t, i).minus.len()
}

fn remove_entry(cell: &mut Vec<u8>, v: u8) {
    let pos = cell.iter().position(|&x| x == v).expect("entry present");
    cell.remove(pos);
}

fn insert_entry(cell: &mut Vec<u8>, v: u8) {
    match cell.binary_search(&v) {
        Ok(_) => panic!("entry {v} already present"),
        Err(pos) => cell.insert(pos, v),
    }
}

/// The row index of the unique box in column `c` whose cell contains `v`.
fn row_of(t: &SetValuedTableau, c: usize, v: u8) -> usize {
    t.rows()
        .iter()
        .position(|row| c < row.len() && row[c].contains(&v))
        .expect("column contains the letter")
}

/// Lowering operator `f_i`; `None` encodes the crystal's 0 element.
pub fn f_svt(t: &SetValuedTableau, i: u8) -> Option<SetValuedTableau> {
    let sig = signature(t, i);
    let &c = sig.plus.last()?;
    let r = row_of(t, c, i);
    let mut cells = t.rows().to_vec();
    let right_has_i = c + 1 < cells[r].len() && cells[r][c + 1].contains(&i);
    if right_has_i {
        // The right neighbour must also contain i + 1; move the boundary.
        remove_entry(&mut cells[r][c + 1], i);
        insert_entry(&mut cells[r][c], i + 1);
    } else {
        remove_entry(&mut cells[r][c], i);
        insert_entry(&mut cells[r][c], i + 1);
    }
    Some(SetValuedTableau::from_parts_unchecked(t.shape().clone(), t.n(), cells))
}

/// Raising operator `e_i`, the exact inverse of `f_i`.
pub fn e_svt(t: &SetValuedTableau, i: u8) -> Option<SetValuedTableau> {
    let sig = signature(t, i);
    let &c = sig.minus.first()?;
    let r = row_of(t, c, i + 1);
    let mut cells = t.rows().to_vec();
    let left_has_i1 = c > 0 && cells[r][c - 1].contains(&(i + 1));
    if left_has_i1 {
        remove_entry(&mut cells[r][c - 1], i + 1);
        insert_entry(&mut cells[r][c], i);
    } else {
        remove_entry(&mut cells[r][c], i + 1);
        insert_entry(&mut cells[r][c], i);
    }
    Some(SetValuedTableau::from_parts_unchecked(t.shape().clone(), t.n(), cells))
}

pub fn is_highest_weight(t: &SetValuedTableau) -> bool {
    (1..t.n()).all(|i| epsilon(t, i) == 0)
}

pub fn is_lowest_weight(t: &SetValuedTableau) -> bool {
    (1..t.n()).all(|i| phi(t, i) == 0)
}

/// Kind of a crystal edge.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum EdgeKind {
    Ordinary,
    K,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub index: u8,
    pub kind: EdgeKind,
}

/// The crystal graph on `svssyt^n(λ)`, with optional K-theory edges for
/// single-row and single-column shapes.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub shape: Partition,
    pub n: u8,
    pub with_k_edges: bool,
    nodes: Vec<SetValuedTableau>,
    index: BTreeMap<SetValuedTableau, usize>,
    pub edges: Vec<Edge>,
}

impl CrystalGraph {
    /// Builds the full graph over `enumerate_svt(shape, n)`. Node numbering
    /// follows the canonical enumeration order, so graphs are reproducible.
    pub fn build(shape: &Partition, n: u8, with_k_edges: bool) -> Result<Self> {
        if with_k_edges && !crate::kcrystal::is_row_or_column(shape) {
            return Err(Error::KShapeUnsupported(shape.parts().to_vec()));
        }
        let nodes = enumerate_svt(shape, n, None);
        let index: BTreeMap<SetValuedTableau, usize> =
            nodes.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        let mut edges = Vec::new();
        for (from, t) in nodes.iter().enumerate() {
            for i in 1..n {
                if let Some(u) = f_svt(t, i) {
                    edges.push(Edge { from, to: index[&u], index: i, kind: EdgeKind::Ordinary });
                }
                if with_k_edges {
                    if let Some(u) = crate::kcrystal::f_k(t, i).expect("shape checked above") {
                        edges.push(Edge { from, to: index[&u], index: i, kind: EdgeKind::K });
                    }
                }
            }
        }
        edges.sort();
        Ok(CrystalGraph { shape: shape.clone(), n, with_k_edges, nodes, index, edges })
    }

    pub fn nodes(&self) -> &[SetValuedTableau] {
        &self.nodes
    }

    pub fn node_index(&self, t: &SetValuedTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn ordinary_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Ordinary)
    }

    /// Connected components of the ordinary-edge graph, each with its unique
    /// highest-weight node. Errors if some component fails to have exactly
    /// one highest-weight element.
    pub fn components(&self) -> Result<Vec<Component>> {
        let mut comp = vec![usize::MAX; self.nodes.len()];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for e in self.ordinary_edges() {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut components = Vec::new();
        for start in 0..self.nodes.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            let highest: Vec<usize> =
                members.iter().copied().filter(|&v| is_highest_weight(&self.nodes[v])).collect();
            if highest.len() != 1 {
                return Err(Error::msg(format!(
                    "component of node {} has {} highest-weight elements",
                    self.nodes[start], highest.len()
                )));
            }
            let hw = highest[0];
            if !self.nodes[hw].weight().is_partition() {
                return Err(Error::msg(format!(
                    "highest weight {} of {} is not a partition",
                    self.nodes[hw].weight(), self.nodes[hw]
                )));
            }
            components.push(Component { nodes: members, highest: hw });
        }
        Ok(components)
    }

    /// The unique lowest-weight node of the component containing `v`.
    pub fn lowest_of_component(&self, component: &Component) -> usize {
        let lows: Vec<usize> = component
            .nodes
            .iter()
            .copied()
            .filter(|&v| is_lowest_weight(&self.nodes[v]))
            .collect();
        assert_eq!(lows.len(), 1, "regular component has a unique lowest weight");
        lows[0]
    }

    /// DOT export; ordinary edges solid and colored by index, K edges dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n");
        for (k, t) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{k} [label=\"{t}\"];");
        }
        for e in &self.edges {
            let style = match e.kind {
                EdgeKind::Ordinary => "solid",
                EdgeKind::K => "dashed",
            };
            let _ = writeln!(
                s,
                "  n{} -> n{} [label=\"{}\", color=\"{}\", style={}];",
                e.from, e.to, e.index, edge_color(e.index), style
            );
        }
        s.push_str("}\n");
        s
    }

    /// JSON export with full node serializations.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": "crystal-graph/1",
            "shape": self.shape.parts(),
            "n": self.n,
            "k_edges": self.with_k_edges,
            "nodes": self.nodes,
            "edges": self.edges.iter().map(|e| serde_json::json!({
                "from": e.from,
                "to": e.to,
                "i": e.index,
                "kind": match e.kind { EdgeKind::Ordinary => "ordinary", EdgeKind::K => "k" },
            })).collect::<Vec<_>>(),
        })
    }
}

fn edge_color(i: u8) -> &'static str {
    const COLORS: [&str; 6] = ["blue", "red", "forestgreen", "orange", "purple", "brown"];
    COLORS[(i as usize - 1) % COLORS.len()]
}

/// One connected component: sorted member indices plus the highest-weight
/// node index.
#[derive(Clone, Debug)]
pub struct Component {
    pub nodes: Vec<usize>,
    pub highest: usize,
}

/// Classical Bender–Knuth involution `t_i` on an all-singleton tableau.
///
/// In every row the free `i`s and free `i + 1`s form a contiguous block;
/// their counts are interchanged.
pub fn bender_knuth(t: &SetValuedTableau, i: u8) -> Result<SetValuedTableau> {
    if !t.is_ssyt() {
        return Err(Error::InvalidTableau("Bender-Knuth requires singleton cells".into()));
    }
    let mut cells = t.rows().to_vec();
    let rows = cells.len();
    for r in 0..rows {
        let mut free_i = Vec::new();
        let mut free_i1 = Vec::new();
        for c in 0..cells[r].len() {
            let v = cells[r][c][0];
            if v == i {
                let below_is_i1 = r + 1 < rows && c < cells[r + 1].len() && cells[r + 1][c][0] == i + 1;
                if !below_is_i1 {
                    free_i.push(c);
                }
            } else if v == i + 1 {
                let above_is_i = r > 0 && c < cells[r - 1].len() && cells[r - 1][c][0] == i;
                if !above_is_i {
                    free_i1.push(c);
                }
            }
        }
        if free_i.is_empty() && free_i1.is_empty() {
            continue;
        }
        let block: Vec<usize> = free_i.iter().chain(free_i1.iter()).copied().collect();
        let lo = *block.iter().min().unwrap();
        let hi = *block.iter().max().unwrap();
        debug_assert_eq!(hi - lo + 1, block.len(), "free block is contiguous");
        let (x, y) = (free_i.len(), free_i1.len());
        for (k, c) in (lo..=hi).enumerate() {
            cells[r][c][0] = if k < y { i } else { i + 1 };
        }
        let _ = x;
    }
    Ok(SetValuedTableau::from_parts_unchecked(t.shape().clone(), t.n(), cells))
}

/// Schützenberger evacuation via Bender–Knuth moves:
/// `T* = t_1 (t_2 t_1) ... (t_{n-1} ... t_2 t_1) T`, rightmost factor first.
pub fn evacuation(t: &SetValuedTableau) -> Result<SetValuedTableau> {
    let n = t.n();
    let mut cur = t.clone();
    for g in (1..n).rev() {
        for i in 1..=g {
            cur = bender_knuth(&cur, i)?;
        }
    }
    Ok(cur)
}

/// Grid form used by the K-Bender–Knuth machinery: cells hold *ranks* into
/// some totally ordered alphabet, with `None` marking absent (skew) cells.
pub(crate) type RankGrid = Vec<Vec<Option<Vec<usize>>>>;

/// Applies the K-Bender–Knuth move for the adjacent rank pair `(p, p + 1)`.
///
/// A box is free if it contains `p` with no `p + 1` directly below, or
/// `p + 1` with no `p` directly above. Within each row, the free boxes'
/// `(has p, has p+1)` patterns are reversed and each pattern is swapped;
/// letters other than `p`, `p + 1` never move.
pub(crate) fn k_move_ranked(grid: &mut RankGrid, p: usize) {
    let q = p + 1;
    let has = |grid: &RankGrid, r: usize, c: usize, v: usize| -> bool {
        grid.get(r)
            .and_then(|row| row.get(c))
            .and_then(|cell| cell.as_ref())
            .is_some_and(|cell| cell.contains(&v))
    };
    let rows = grid.len();
    let mut free: Vec<Vec<(usize, (bool, bool))>> = vec![Vec::new(); rows];
    for r in 0..rows {
        for c in 0..grid[r].len() {
            let Some(cell) = &grid[r][c] else { continue };
            let has_p = cell.contains(&p);
            let has_q = cell.contains(&q);
            let mut is_free = false;
            if has_p && !(r + 1 < rows && has(grid, r + 1, c, q)) {
                is_free = true;
            }
            if has_q && !(r > 0 && has(grid, r - 1, c, p)) {
                is_free = true;
            }
            if is_free && (has_p || has_q) {
                free[r].push((c, (has_p, has_q)));
            }
        }
    }
    for r in 0..rows {
        let row_free = &free[r];
        let t = row_free.len();
        let new_patterns: Vec<(bool, bool)> =
            (0..t).map(|j| { let (hp, hq) = row_free[t - 1 - j].1; (hq, hp) }).collect();
        for (j, &(c, _)) in row_free.iter().enumerate() {
            let cell = grid[r][c].as_mut().unwrap();
            cell.retain(|&v| v != p && v != q);
            let (np, nq) = new_patterns[j];
            if np {
                cell.push(p);
            }
            if nq {
                cell.push(q);
            }
            cell.sort_unstable();
        }
    }
}

fn svt_to_rank_grid(t: &SetValuedTableau) -> RankGrid {
    t.rows()
        .iter()
        .map(|row| row.iter().map(|cell| Some(cell.iter().map(|&v| v as usize).collect())).collect())
        .collect()
}

fn rank_grid_to_svt(shape: &Partition, n: u8, grid: RankGrid) -> SetValuedTableau {
    let cells = grid
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|cell| cell.expect("straight shape").into_iter().map(|v| v as u8).collect())
                .collect()
        })
        .collect();
    SetValuedTableau::from_parts_unchecked(shape.clone(), n, cells)
}

/// K-Bender–Knuth involution `K_i` on a set-valued tableau.
pub fn k_bender_knuth(t: &SetValuedTableau, i: u8) -> SetValuedTableau {
    let mut grid = svt_to_rank_grid(t);
    k_move_ranked(&mut grid, i as usize);
    rank_grid_to_svt(t.shape(), t.n(), grid)
}

/// K-evacuation: `K_1 (K_2 K_1) ... (K_{n-1} ... K_2 K_1) T`, an involution.
pub fn k_evacuation(t: &SetValuedTableau) -> SetValuedTableau {
    let n = t.n();
    let mut cur = t.clone();
    for g in (1..n).rev() {
        for i in 1..=g {
            cur = k_bender_knuth(&cur, i);
        }
    }
    cur
}

/// Lusztig involution, computed by path mirroring inside the component of
/// `t`: climb to the highest weight along `e`-steps `(a_1, ..., a_k)`, then
/// `T* = e_{n-a_1} ... e_{n-a_k} (lowest node)`. Any climb order gives the
/// same result by crystal regularity; the smallest index is taken at each
/// step for determinism.
pub fn lusztig_involution(t: &SetValuedTableau, graph: &CrystalGraph) -> Result<SetValuedTableau> {
    if graph.node_index(t).is_none() {
        return Err(Error::msg(format!("tableau {t} is not a node of the graph")));
    }
    let n = t.n();
    let mut word = Vec::new();
    let mut cur = t.clone();
    'climb: loop {
        for i in 1..n {
            if let Some(up) = e_svt(&cur, i) {
                word.push(i);
                cur = up;
                continue 'climb;
            }
        }
        break;
    }
    // The unique lowest-weight node of the component, by greedy descent.
    let mut star = t.clone();
    'descend: loop {
        for i in 1..n {
            if let Some(down) = f_svt(&star, i) {
                star = down;
                continue 'descend;
            }
        }
        break;
    }
    for &a in word.iter().rev() {
        star = e_svt(&star, n - a).expect("mirrored path exists by regularity");
    }
    Ok(star)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn svt(shape: &[usize], n: u8, cells: Vec<Vec<Vec<u8>>>) -> SetValuedTableau {
        SetValuedTableau::new(p(shape), n, cells).unwrap()
    }

    #[test]
    fn signature_examples() {
        // [{1},{1,2}]/[{3}]: column 2 holds both 1 and 2, so only column 1
        // contributes, an uncancelled +.
        let t = svt(&[2, 1], 3, vec![vec![vec![1], vec![1, 2]], vec![vec![3]]]);
        let sig = signature(&t, 1);
        assert_eq!(sig.plus, vec![0]);
        assert!(sig.minus.is_empty());

        let u = SetValuedTableau::highest_weight(&p(&[2, 2]), 3).unwrap();
        let sig = signature(&u, 1);
        assert!(sig.plus.is_empty() && sig.minus.is_empty());

        let t = svt(&[2], 2, vec![vec![vec![1], vec![1]]]);
        let sig = signature(&t, 1);
        assert_eq!(sig.plus, vec![0, 1]);
        assert!(sig.minus.is_empty());
    }

    #[test]
    fn f_examples_from_figure1() {
        let t = svt(&[2, 1], 3, vec![vec![vec![1], vec![1, 2]], vec![vec![3]]]);
        let ft = f_svt(&t, 1).unwrap();
        assert_eq!(ft, svt(&[2, 1], 3, vec![vec![vec![1, 2], vec![2]], vec![vec![3]]]));
        let fft = f_svt(&ft, 2).unwrap();
        assert_eq!(fft, svt(&[2, 1], 3, vec![vec![vec![1, 2], vec![3]], vec![vec![3]]]));
        // Inverses.
        assert_eq!(e_svt(&ft, 1).unwrap(), t);
        assert_eq!(e_svt(&fft, 2).unwrap(), ft);
    }

    #[test]
    fn f_null_on_balanced_column() {
        let u = SetValuedTableau::highest_weight(&p(&[1, 1]), 2).unwrap();
        assert!(f_svt(&u, 1).is_none());
    }

    #[test]
    fn e_example_third_component() {
        let t = svt(&[2, 1], 3, vec![vec![vec![1], vec![1, 3]], vec![vec![2]]]);
        let et = e_svt(&t, 2).unwrap();
        assert_eq!(et, svt(&[2, 1], 3, vec![vec![vec![1], vec![1, 2]], vec![vec![2]]]));
    }

    #[test]
    fn highest_weight_killed_by_e() {
        let u = SetValuedTableau::highest_weight(&p(&[2, 1]), 3).unwrap();
        for i in 1..3 {
            assert!(e_svt(&u, i).is_none());
        }
    }

    #[test]
    fn crystal_21_n3_has_seven_components() {
        let g = CrystalGraph::build(&p(&[2, 1]), 3, false).unwrap();
        let comps = g.components().unwrap();
        assert_eq!(comps.len(), 7);
        let excess0: Vec<_> = comps
            .iter()
            .filter(|c| c.nodes.iter().all(|&v| g.nodes()[v].excess() == 0))
            .collect();
        assert_eq!(excess0.len(), 1);
        assert_eq!(excess0[0].nodes.len(), 8);
    }

    #[test]
    fn single_box_graph() {
        let g = CrystalGraph::build(&p(&[1]), 2, false).unwrap();
        assert_eq!(g.nodes().len(), 3);
        // One edge {1} -> {2}; the cell {1,2} is isolated.
        assert_eq!(g.ordinary_edges().count(), 1);
        let both = g.nodes().iter().position(|t| t.cell(0, 0) == [1, 2]).unwrap();
        assert!(g.ordinary_edges().all(|e| e.from != both && e.to != both));
    }

    #[test]
    fn bender_knuth_rejects_set_valued_cells() {
        let t = svt(&[2], 3, vec![vec![vec![1], vec![1, 2]]]);
        assert!(bender_knuth(&t, 1).is_err());
        assert!(evacuation(&t).is_err());
    }

    #[test]
    fn bender_knuth_involution_and_evacuation() {
        for shape in [p(&[2, 1]), p(&[3, 3]), p(&[2, 2, 1])] {
            for t in enumerate_svt(&shape, 3, Some(0)) {
                for i in 1..3 {
                    let s = bender_knuth(&t, i).unwrap();
                    assert!(s.validate().is_ok());
                    assert_eq!(bender_knuth(&s, i).unwrap(), t);
                }
                let e = evacuation(&t).unwrap();
                assert_eq!(evacuation(&e).unwrap(), t);
                // Evacuation weight is the w_0-reversed weight.
                assert_eq!(e.weight(), t.weight().reversed());
            }
        }
        let u = SetValuedTableau::highest_weight(&p(&[2, 1]), 3).unwrap();
        assert!(is_lowest_weight(&evacuation(&u).unwrap()));
    }

    #[test]
    fn k_bender_knuth_worked_examples() {
        let t = svt(&[2, 1], 3, vec![vec![vec![1], vec![1, 2]], vec![vec![3]]]);
        let kt = k_bender_knuth(&t, 2);
        assert_eq!(kt, svt(&[2, 1], 3, vec![vec![vec![1], vec![1, 3]], vec![vec![2]]]));

        // K_1 K_2 K_1 (1,{2,3}/2) = ({1,2},2/3).
        let t = svt(&[2, 1], 3, vec![vec![vec![1], vec![2, 3]], vec![vec![2]]]);
        let s1 = k_bender_knuth(&t, 1);
        assert_eq!(s1, svt(&[2, 1], 3, vec![vec![vec![1], vec![1, 3]], vec![vec![2]]]));
        let s2 = k_bender_knuth(&s1, 2);
        assert_eq!(s2, svt(&[2, 1], 3, vec![vec![vec![1], vec![1, 2]], vec![vec![3]]]));
        let s3 = k_bender_knuth(&s2, 1);
        assert_eq!(s3, svt(&[2, 1], 3, vec![vec![vec![1, 2], vec![2]], vec![vec![3]]]));
        // That is K-evacuation for n = 3.
        assert_eq!(k_evacuation(&t), s3);
    }

    #[test]
    fn k_bender_knuth_is_involution_and_fixes_untouched() {
        for t in enumerate_svt(&p(&[2, 1]), 3, None) {
            for i in 1..3 {
                let s = k_bender_knuth(&t, i);
                assert!(s.validate().is_ok());
                assert_eq!(k_bender_knuth(&s, i), t);
            }
            let k = k_evacuation(&t);
            assert!(k.validate().is_ok());
            assert_eq!(k_evacuation(&k), t);
        }
        // K_i is the identity without i or i+1 anywhere.
        let t = svt(&[2], 3, vec![vec![vec![1], vec![1]]]);
        assert_eq!(k_bender_knuth(&t, 2), t);
    }

    #[test]
    fn k_bender_knuth_restricts_to_bender_knuth_on_ssyt() {
        for t in enumerate_svt(&p(&[2, 2]), 4, Some(0)) {
            for i in 1..4 {
                assert_eq!(k_bender_knuth(&t, i), bender_knuth(&t, i).unwrap());
            }
        }
    }

    #[test]
    fn lusztig_fixed_point_and_difference_from_k_evacuation() {
        let g = CrystalGraph::build(&p(&[2, 1]), 3, false).unwrap();
        let t = svt(&[2, 1], 3, vec![vec![vec![1], vec![2, 3]], vec![vec![2]]]);
        let star = lusztig_involution(&t, &g).unwrap();
        assert_eq!(star, t);
        // K-evacuation sends it elsewhere.
        assert_ne!(k_evacuation(&t), t);
        assert_eq!(
            k_evacuation(&t),
            svt(&[2, 1], 3, vec![vec![vec![1, 2], vec![2]], vec![vec![3]]])
        );
    }

    #[test]
    fn lusztig_is_involution_on_21() {
        let g = CrystalGraph::build(&p(&[2, 1]), 3, false).unwrap();
        for t in g.nodes() {
            let s = lusztig_involution(t, &g).unwrap();
            assert_eq!(lusztig_involution(&s, &g).unwrap(), *t);
        }
        // Highest goes to lowest in each component.
        for comp in g.components().unwrap() {
            let hw = &g.nodes()[comp.highest];
            let lw = &g.nodes()[g.lowest_of_component(&comp)];
            assert_eq!(lusztig_involution(hw, &g).unwrap(), *lw);
        }
    }

    #[test]
    fn phi_epsilon_axiom() {
        for t in enumerate_svt(&p(&[2, 1]), 3, None) {
            let wt = t.weight();
            for i in 1..3u8 {
                let lhs = phi(&t, i) as i64;
                let rhs = epsilon(&t, i) as i64 + wt.coroot_pairing(i as usize);
                assert_eq!(lhs, rhs);
            }
        }
    }
}
