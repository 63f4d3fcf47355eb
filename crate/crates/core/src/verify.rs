//! Batch verification suites. Each suite returns `Ok(())` on success or a
//! description of the first counterexample found, so the CLI can surface it.

use crate::crystal::{
    self, bender_knuth, e_svt, evacuation, f_svt, k_bender_knuth, k_evacuation,
    lusztig_involution, CrystalGraph,
};
use crate::expand::{lenart_coefficient, lenart_support, schur_expansion, uncrowd};
use crate::hecke::{enumerate_arrays, hecke_insert, hecke_reverse};
use crate::kcrystal::{e_k, f_k, i_k_strings, k_character, k_demazure, lascoux_of_w_lambda};
use crate::models::{
    enumerate_eyd, enumerate_marked_gt, eyd_crystal_op, grothendieck_via_gt, marked_gt_to_svt,
    svt_to_marked_gt, theta, theta_inverse,
};
use crate::perm::{demazure_product, Perm};
use crate::poly::{
    apply_word, demazure, demazure_lascoux, divided_difference, grothendieck_from_tableaux,
    schur_from_tableaux, BetaPolynomial, OperatorKind, ReducedWord,
};
use crate::shape::Partition;
use crate::tableaux::{enumerate_svt, SetValuedTableau};

type Suite = std::result::Result<(), String>;

fn fail(msg: String) -> Suite {
    Err(msg)
}

/// Partitions contained in the `max_part × max_rows` box, including the
/// empty one.
pub fn shapes_in_box(max_part: usize, max_rows: usize) -> Vec<Partition> {
    Partition::new(vec![max_part; max_rows]).unwrap().subpartitions()
}

/// Crystal axioms on `svssyt^n(λ)`: mutual inversion, weight shifts, the
/// φ/ε axiom, unique highest weights per component, and a labeled-graph
/// isomorphism from each component onto the semistandard crystal `B(μ)`.
pub fn crystal_axioms_suite(max_part: usize, ns: &[u8]) -> Suite {
    for &n in ns {
        for shape in shapes_in_box(max_part, 2) {
            let graph = match CrystalGraph::build(&shape, n, false) {
                Ok(g) => g,
                Err(e) => return fail(format!("graph build failed for {shape}, n={n}: {e}")),
            };
            for t in graph.nodes() {
                let wt = t.weight();
                for i in 1..n {
                    if let Some(ft) = f_svt(t, i) {
                        if e_svt(&ft, i).as_ref() != Some(t) {
                            return fail(format!("e_{i} f_{i} != id at {t}"));
                        }
                        if ft.validate().is_err() {
                            return fail(format!("f_{i}({t}) invalid"));
                        }
                        let fwt = ft.weight();
                        let ok = (0..n as usize).all(|j| {
                            let delta = fwt.entries()[j] as i64 - wt.entries()[j] as i64;
                            let expect = if j + 1 == i as usize {
                                -1
                            } else if j == i as usize {
                                1
                            } else {
                                0
                            };
                            delta == expect
                        });
                        if !ok || ft.excess() != t.excess() {
                            return fail(format!("weight/excess shift wrong at f_{i}({t})"));
                        }
                    }
                    if let Some(et) = e_svt(t, i) {
                        if f_svt(&et, i).as_ref() != Some(t) {
                            return fail(format!("f_{i} e_{i} != id at {t}"));
                        }
                    }
                    let lhs = crystal::phi(t, i) as i64;
                    let rhs = crystal::epsilon(t, i) as i64 + wt.coroot_pairing(i as usize);
                    if lhs != rhs {
                        return fail(format!("phi = eps + <h,wt> fails at {t}, i={i}"));
                    }
                }
            }
            let comps = match graph.components() {
                Ok(c) => c,
                Err(e) => return fail(format!("components of {shape}, n={n}: {e}")),
            };
            for comp in &comps {
                let mu = graph.nodes()[comp.highest].weight().sort_decreasing();
                if let Err(e) = check_component_isomorphic(&graph, comp, &mu, n) {
                    return fail(format!("component of weight {mu} in {shape}, n={n}: {e}"));
                }
            }
        }
    }
    Ok(())
}

/// Walks both crystals simultaneously from their highest-weight elements.
fn check_component_isomorphic(
    graph: &CrystalGraph,
    comp: &crate::crystal::Component,
    mu: &Partition,
    n: u8,
) -> Suite {
    let model = enumerate_svt(mu, n, Some(0));
    if model.len() != comp.nodes.len() {
        return fail(format!("size {} != dim B(mu) = {}", comp.nodes.len(), model.len()));
    }
    let hw_model = SetValuedTableau::highest_weight(mu, n).map_err(|e| e.to_string())?;
    let mut map: std::collections::BTreeMap<SetValuedTableau, SetValuedTableau> = Default::default();
    let hw = graph.nodes()[comp.highest].clone();
    map.insert(hw.clone(), hw_model.clone());
    let mut queue = vec![hw];
    while let Some(t) = queue.pop() {
        let image = map[&t].clone();
        for i in 1..n {
            match (f_svt(&t, i), f_svt(&image, i)) {
                (None, None) => {}
                (Some(ft), Some(fi)) => {
                    if let Some(prev) = map.get(&ft) {
                        if *prev != fi {
                            return fail(format!("edge conflict at {t} --{i}-->"));
                        }
                    } else {
                        map.insert(ft.clone(), fi);
                        queue.push(ft);
                    }
                }
                _ => return fail(format!("f_{i} defined on one side only at {t}")),
            }
        }
    }
    if map.len() != comp.nodes.len() {
        return fail("component not reachable from its highest weight".into());
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Reading {
    FarEastern,
    MiddleEastern,
}

/// Letter occurrences in reading order, each tagged with its box.
fn reading_word(t: &SetValuedTableau, reading: Reading) -> Vec<(usize, usize, u8)> {
    let mut out = Vec::new();
    match reading {
        Reading::FarEastern => {
            // Columns left to right, bottom to top, sets read decreasing.
            let cols = t.shape().part(0);
            for c in 0..cols {
                for r in (0..t.rows().len()).rev() {
                    if c < t.rows()[r].len() {
                        for &v in t.rows()[r][c].iter().rev() {
                            out.push((r, c, v));
                        }
                    }
                }
            }
        }
        Reading::MiddleEastern => {
            // Rows bottom to top, left to right, sets read decreasing.
            for r in (0..t.rows().len()).rev() {
                for c in 0..t.rows()[r].len() {
                    for &v in t.rows()[r][c].iter().rev() {
                        out.push((r, c, v));
                    }
                }
            }
        }
    }
    out
}

/// `f_i` computed through a reading-word signature rule; the surviving `+`
/// selects the box, the action on the box is the usual one.
fn oracle_f(t: &SetValuedTableau, i: u8, reading: Reading) -> Option<SetValuedTableau> {
    let word = reading_word(t, reading);
    let mut plus: Vec<(usize, usize)> = Vec::new();
    let mut minus: Vec<(usize, usize)> = Vec::new();
    for &(r, c, v) in &word {
        if v == i {
            if minus.is_empty() {
                plus.push((r, c));
            } else {
                minus.pop();
            }
        } else if v == i + 1 {
            minus.push((r, c));
        }
    }
    let &(r, c) = plus.last()?;
    let mut cells = t.rows().to_vec();
    let right_has_i = c + 1 < cells[r].len() && cells[r][c + 1].contains(&i);
    if right_has_i {
        let pos = cells[r][c + 1].iter().position(|&x| x == i).unwrap();
        cells[r][c + 1].remove(pos);
        let ins = cells[r][c].binary_search(&(i + 1)).unwrap_err();
        cells[r][c].insert(ins, i + 1);
    } else {
        let pos = cells[r][c].iter().position(|&x| x == i).unwrap();
        cells[r][c].remove(pos);
        let ins = cells[r][c].binary_search(&(i + 1)).unwrap_err();
        cells[r][c].insert(ins, i + 1);
    }
    SetValuedTableau::new(t.shape().clone(), t.n(), cells).ok()
}

fn oracle_e(t: &SetValuedTableau, i: u8, reading: Reading) -> Option<SetValuedTableau> {
    let word = reading_word(t, reading);
    let mut plus: Vec<(usize, usize)> = Vec::new();
    let mut minus: Vec<(usize, usize)> = Vec::new();
    for &(r, c, v) in &word {
        if v == i {
            if minus.is_empty() {
                plus.push((r, c));
            } else {
                minus.pop();
            }
        } else if v == i + 1 {
            minus.push((r, c));
        }
    }
    let &(r, c) = minus.first()?;
    let mut cells = t.rows().to_vec();
    let left_has_i1 = c > 0 && cells[r][c - 1].contains(&(i + 1));
    if left_has_i1 {
        let pos = cells[r][c - 1].iter().position(|&x| x == i + 1).unwrap();
        cells[r][c - 1].remove(pos);
        let ins = cells[r][c].binary_search(&i).unwrap_err();
        cells[r][c].insert(ins, i);
    } else {
        let pos = cells[r][c].iter().position(|&x| x == i + 1).unwrap();
        cells[r][c].remove(pos);
        let ins = cells[r][c].binary_search(&i).unwrap_err();
        cells[r][c].insert(ins, i);
    }
    SetValuedTableau::new(t.shape().clone(), t.n(), cells).ok()
}

/// The Far-Eastern and Middle-Eastern reading rules agree with the column
/// rule, exhaustively over `λ ⊆ (max_part, max_part)` and the given `n`s.
pub fn reading_word_suite(max_part: usize, ns: &[u8]) -> Suite {
    for &n in ns {
        for shape in shapes_in_box(max_part, 2) {
            for t in enumerate_svt(&shape, n, None) {
                for i in 1..n {
                    let canonical = f_svt(&t, i);
                    for reading in [Reading::FarEastern, Reading::MiddleEastern] {
                        if oracle_f(&t, i, reading) != canonical {
                            return fail(format!("reading-word f_{i} differs at {t}"));
                        }
                        if oracle_e(&t, i, reading) != e_svt(&t, i) {
                            return fail(format!("reading-word e_{i} differs at {t}"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Involution properties: Bender–Knuth, K-Bender–Knuth, both evacuations,
/// and the Lusztig involution with its defining edge-reversal law.
pub fn involution_suite(max_part: usize, ns: &[u8]) -> Suite {
    for &n in ns {
        for shape in shapes_in_box(max_part, 2) {
            let graph = CrystalGraph::build(&shape, n, false).map_err(|e| e.to_string())?;
            for t in graph.nodes() {
                for i in 1..n {
                    let kt = k_bender_knuth(t, i);
                    if kt.validate().is_err() || k_bender_knuth(&kt, i) != *t {
                        return fail(format!("K_{i} not an involution at {t}"));
                    }
                    if t.is_ssyt() {
                        let bt = bender_knuth(t, i).map_err(|e| e.to_string())?;
                        if bender_knuth(&bt, i).map_err(|e| e.to_string())? != *t {
                            return fail(format!("t_{i} not an involution at {t}"));
                        }
                        if kt != bt {
                            return fail(format!("K_{i} != t_{i} on singleton tableau {t}"));
                        }
                    }
                }
                let ke = k_evacuation(t);
                if k_evacuation(&ke) != *t {
                    return fail(format!("K-evacuation not an involution at {t}"));
                }
                let star = lusztig_involution(t, &graph).map_err(|e| e.to_string())?;
                if lusztig_involution(&star, &graph).map_err(|e| e.to_string())? != *t {
                    return fail(format!("Lusztig not an involution at {t}"));
                }
                if t.is_ssyt() {
                    let ev = evacuation(t).map_err(|e| e.to_string())?;
                    if ev != star {
                        return fail(format!("Lusztig != evacuation at singleton {t}"));
                    }
                }
                // (f_i b)* = e_{n-i}(b*).
                for i in 1..n {
                    let lhs = f_svt(t, i).map(|ft| lusztig_involution(&ft, &graph).unwrap());
                    let rhs = e_svt(&star, n - i);
                    if lhs != rhs {
                        return fail(format!("(f_{i} b)* law fails at {t}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Operator calculus: braid relations, nilpotence/idempotence, the β
/// expansion of the Demazure–Lascoux operator, and agreement of
/// `ϖ_{w_0} x^λ` / `π_{w_0} x^λ` with the tableau generating functions.
pub fn operator_suite(max_part: usize, ns: &[u8]) -> Suite {
    // A deterministic stock of test polynomials.
    let stock = |n: usize| -> Vec<BetaPolynomial> {
        let mut fs = Vec::new();
        let mut exps = vec![0u32; n];
        exps[0] = 2;
        if n > 1 {
            exps[1] = 1;
        }
        fs.push(BetaPolynomial::monomial(n, 0, &exps, 1.into()));
        let mut g = BetaPolynomial::one(n);
        for j in 0..n.min(3) {
            let mut e = vec![0u32; n];
            e[j] = (j as u32 % 2) + 1;
            g = &g + &BetaPolynomial::monomial(n, j as u32 % 2, &e, ((j + 1) as i64).into());
        }
        fs.push(g);
        fs
    };
    for &n in ns {
        let n = n as usize;
        for f in stock(n) {
            for i in 1..n {
                let d1 = divided_difference(&f, i).map_err(stringify)?;
                let dd = divided_difference(&d1, i).map_err(stringify)?;
                if !dd.is_zero() {
                    return fail(format!("∂_{i}^2 != 0 on {}", f.render()));
                }
                let pi = demazure(&f, i).map_err(stringify)?;
                if demazure(&pi, i).map_err(stringify)? != pi {
                    return fail(format!("π_{i} not idempotent"));
                }
                let dl = demazure_lascoux(&f, i, true).map_err(stringify)?;
                if demazure_lascoux(&dl, i, true).map_err(stringify)? != dl {
                    return fail(format!("ϖ_{i} not idempotent"));
                }
                let expand = &demazure(&f, i).map_err(stringify)?
                    + &demazure(&f.mul_x(i + 1), i).map_err(stringify)?.mul_beta();
                if dl != expand {
                    return fail(format!("ϖ_{i} != π_{i} + β π_{i} x_{{i+1}}"));
                }
            }
            for i in 1..n.saturating_sub(1) {
                for kind in [OperatorKind::Newton, OperatorKind::Demazure, OperatorKind::DemazureLascoux] {
                    let a = apply_word(&f, &ReducedWord(vec![i, i + 1, i]), kind).map_err(stringify)?;
                    let b = apply_word(&f, &ReducedWord(vec![i + 1, i, i + 1]), kind).map_err(stringify)?;
                    if a != b {
                        return fail(format!("braid relation fails at i={i}"));
                    }
                }
            }
            for i in 1..n {
                for j in 1..n {
                    if i.abs_diff(j) > 1 {
                        for kind in [OperatorKind::Newton, OperatorKind::Demazure, OperatorKind::DemazureLascoux] {
                            let a = apply_word(&f, &ReducedWord(vec![i, j]), kind).map_err(stringify)?;
                            let b = apply_word(&f, &ReducedWord(vec![j, i]), kind).map_err(stringify)?;
                            if a != b {
                                return fail(format!("commutation fails at ({i},{j})"));
                            }
                        }
                    }
                }
            }
        }
    }
    // ϖ_{w_0} x^λ = G_λ and π_{w_0} x^λ = s_λ over three-row shapes.
    for &n in ns {
        for shape in shapes_in_box(max_part, 3) {
            if shape.rows() > n as usize {
                continue;
            }
            let x = BetaPolynomial::x_power(n as usize, &shape.to_composition(n as usize));
            let w0 = ReducedWord(Perm::longest(n as usize).reduced_word());
            let groth = apply_word(&x, &w0, OperatorKind::DemazureLascoux).map_err(stringify)?;
            if groth != grothendieck_from_tableaux(&shape, n) {
                return fail(format!("ϖ_w0 x^{shape} != G_{shape} for n={n}"));
            }
            let schur = apply_word(&x, &w0, OperatorKind::Demazure).map_err(stringify)?;
            if schur != schur_from_tableaux(&shape, n) {
                return fail(format!("π_w0 x^{shape} != s_{shape} for n={n}"));
            }
            if !groth.is_symmetric() {
                return fail(format!("G_{shape} not symmetric"));
            }
        }
    }
    Ok(())
}

fn stringify(e: crate::Error) -> String {
    e.to_string()
}

/// The Schur expansion identity, Lenart's flagged formula, and the counting
/// consequences of the uncrowding bijection.
pub fn schur_expansion_suite(max_part: usize, ns: &[u8]) -> Suite {
    for &n in ns {
        for shape in shapes_in_box(max_part, 2) {
            let table = schur_expansion(&shape, n).map_err(stringify)?;
            if table.to_polynomial() != grothendieck_from_tableaux(&shape, n) {
                return fail(format!("expansion identity fails for {shape}, n={n}"));
            }
            // Lenart agreement wherever μ fits in n rows.
            let mut support = lenart_support(&shape, n as usize);
            for mu in table.multiplicities.keys() {
                if !support.contains(mu) {
                    support.push(mu.clone());
                }
            }
            for mu in &support {
                let f = lenart_coefficient(&shape, mu).map_err(stringify)?;
                let m = table.multiplicity(mu);
                if mu.rows() <= n as usize && f != m {
                    return fail(format!("M vs Lenart mismatch at λ={shape}, μ={mu}: {m} vs {f}"));
                }
            }
            // Uncrowding: injective, weight preserving, counts match.
            let all = enumerate_svt(&shape, n, None);
            let mut images = std::collections::BTreeSet::new();
            for t in &all {
                let (s, f) = uncrowd(t).map_err(stringify)?;
                if s.weight() != t.weight() {
                    return fail(format!("uncrowding changes weight at {t}"));
                }
                if f.validate().is_err() {
                    return fail(format!("uncrowding recording tableau invalid at {t}"));
                }
                if s.shape() != &f.shape.outer || f.shape.inner != shape {
                    return fail(format!("uncrowding shapes disagree at {t}"));
                }
                if !images.insert((s, f.rows.clone())) {
                    return fail(format!("uncrowding not injective at {t}"));
                }
            }
            let total: usize = support
                .iter()
                .filter(|mu| mu.rows() <= n as usize)
                .map(|mu| {
                    enumerate_svt(mu, n, Some(0)).len()
                        * lenart_coefficient(&shape, mu).unwrap_or(0)
                })
                .sum();
            if total != all.len() {
                return fail(format!(
                    "Σ |SSYT(μ)| F_μ^λ = {total} != |svssyt| = {} for λ={shape}, n={n}",
                    all.len()
                ));
            }
        }
    }
    Ok(())
}

/// Equality of the three models: set-valued tableaux, excited Young
/// diagrams, and marked GT patterns, with their bijections and crystal
/// equivariance.
pub fn cross_model_suite(max_part: usize, ns: &[u8]) -> Suite {
    for &n in ns {
        for shape in shapes_in_box(max_part, 2) {
            let svts = enumerate_svt(&shape, n, None);
            let eyds = enumerate_eyd(&shape, n);
            if svts.len() != eyds.len() {
                return fail(format!("|svssyt| != |EYD| for {shape}, n={n}"));
            }
            let images: std::collections::BTreeSet<_> = svts.iter().map(theta).collect();
            if images != eyds.iter().cloned().collect() {
                return fail(format!("Θ image differs from EYD set for {shape}, n={n}"));
            }
            for t in &svts {
                let e = theta(t);
                if e.cells.len() != t.weight().total() {
                    return fail(format!("Θ not weight preserving at {t}"));
                }
                match theta_inverse(&e) {
                    Ok(back) if back == *t => {}
                    _ => return fail(format!("Θ not invertible at {t}")),
                }
                for i in 1..n {
                    let lhs = f_svt(t, i).map(|ft| theta(&ft));
                    if lhs != eyd_crystal_op(&e, i, true) {
                        return fail(format!("Θ does not intertwine f_{i} at {t}"));
                    }
                    let lhs = e_svt(t, i).map(|et| theta(&et));
                    if lhs != eyd_crystal_op(&e, i, false) {
                        return fail(format!("Θ does not intertwine e_{i} at {t}"));
                    }
                }
            }
            let patterns = enumerate_marked_gt(&shape, n);
            if patterns.len() != svts.len() {
                return fail(format!("|marked GT| != |svssyt| for {shape}, n={n}"));
            }
            for pat in &patterns {
                let t = marked_gt_to_svt(pat, n).map_err(stringify)?;
                if pat.weight() != t.weight() || pat.marks.len() != t.excess() {
                    return fail(format!("GT bijection not weight/excess preserving at {t}"));
                }
                if svt_to_marked_gt(&t) != *pat {
                    return fail(format!("GT bijection not invertible at {t}"));
                }
            }
            let g = grothendieck_via_gt(&shape, n).map_err(stringify)?;
            if g != grothendieck_from_tableaux(&shape, n) {
                return fail(format!("GT generating function differs for {shape}, n={n}"));
            }
        }
    }
    Ok(())
}

/// Exhaustive Hecke insertion round trip, plus the equivalence oracle
/// cross-check: Demazure products and the closure of the defining relations
/// classify words identically, and P's reading word stays in the class.
pub fn hecke_suite(max_letter: u8, max_len: usize) -> Suite {
    let n = max_letter as usize + 1;
    for array in enumerate_arrays(max_letter, max_len as u8, max_len) {
        let (p, q) = hecke_insert(&array);
        if p.validate().is_err() {
            return fail(format!("P not increasing for {array}"));
        }
        if q.validate().is_err() {
            return fail(format!("Q not set-valued semistandard for {array}"));
        }
        if p.shape != *q.shape() {
            return fail(format!("shape mismatch for {array}"));
        }
        match hecke_reverse(&p, &q) {
            Ok(back) if back == array => {}
            Ok(back) => return fail(format!("round trip gave {back} for {array}")),
            Err(e) => return fail(format!("reverse failed for {array}: {e}")),
        }
        // The insertion tableau's reading word is 0-Hecke equivalent to the
        // bottom word.
        if !crate::hecke::hecke_equivalent(&p.column_word(), &array.bottom_word(), n) {
            return fail(format!("P's word leaves the 0-Hecke class for {array}"));
        }
    }
    // Equivalence classes of words of length <= 6 over letters <= 3: the
    // Demazure-product classification must match the closure of the three
    // defining relations.
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..6 {
        let mut next = Vec::new();
        for w in &words {
            if w.len() < 6 {
                for a in 1..=3u8 {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
        }
        words.extend(next.clone());
        words.sort();
        words.dedup();
    }
    let class_of = |w: &[u8]| -> Perm {
        demazure_product(&w.iter().map(|&a| a as usize).collect::<Vec<_>>(), 4)
    };
    // Relations never leave a Demazure class.
    for w in &words {
        let d = class_of(w);
        for v in relation_neighbors(w) {
            if class_of(&v) != d {
                return fail(format!("relation moved {w:?} out of its class to {v:?}"));
            }
        }
    }
    // Conversely, each class restricted to short words is connected by the
    // relations, so closure and Demazure product classify identically.
    let mut by_class: std::collections::BTreeMap<Vec<usize>, Vec<Vec<u8>>> = Default::default();
    for w in &words {
        by_class.entry(class_of(w).one_line().to_vec()).or_default().push(w.clone());
    }
    for members in by_class.values() {
        let set: std::collections::BTreeSet<Vec<u8>> = members.iter().cloned().collect();
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![members[0].clone()];
        seen.insert(members[0].clone());
        while let Some(w) = queue.pop() {
            for v in relation_neighbors(&w) {
                if v.len() <= 6 && set.contains(&v) && seen.insert(v.clone()) {
                    queue.push(v);
                }
            }
        }
        if seen.len() != set.len() {
            return fail(format!("class of {:?} not connected by the relations", members[0]));
        }
    }
    Ok(())
}

/// One-step rewrites: `pp -> p` and `p -> pp`, `pqp <-> qpq`, `pq <-> qp`
/// for `|p-q| > 1`.
fn relation_neighbors(w: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for k in 0..w.len() {
        if k + 1 < w.len() && w[k] == w[k + 1] {
            let mut v = w.to_vec();
            v.remove(k);
            out.push(v);
        }
        let mut v = w.to_vec();
        v.insert(k, w[k]);
        out.push(v);
        if k + 1 < w.len() && w[k].abs_diff(w[k + 1]) > 1 {
            let mut v = w.to_vec();
            v.swap(k, k + 1);
            out.push(v);
        }
        if k + 2 < w.len() && w[k] == w[k + 2] && w[k].abs_diff(w[k + 1]) == 1 {
            let mut v = w.to_vec();
            let (p, q) = (w[k], w[k + 1]);
            v[k] = q;
            v[k + 1] = p;
            v[k + 2] = q;
            out.push(v);
        }
    }
    out
}

/// K-jeu-de-taquin: the two-box rule against its defining rectification on
/// every pair of boxes for `n = 3`, the worked infusion example, and both
/// non-confluence examples.
pub fn kjdt_suite() -> Suite {
    use crate::kjdt::{rectify, two_box_rule, two_box_via_infusion, SkewSetValuedTableau};
    use crate::shape::SkewShape;
    let boxes: Vec<Vec<u8>> =
        vec![vec![1], vec![2], vec![3], vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]];
    for t in &boxes {
        for s in &boxes {
            let direct = two_box_rule(t, s, 3).map_err(stringify)?;
            let via = two_box_via_infusion(t, s, 3).map_err(stringify)?;
            if direct != via {
                return fail(format!("two-box rule differs from rectification at T={t:?}, S={s:?}"));
            }
        }
    }
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    let shape = SkewShape::new(p(&[4, 2, 1]), p(&[2, 1])).map_err(stringify)?;
    let t = SkewSetValuedTableau::new(
        shape,
        2,
        vec![vec![vec![2], vec![2]], vec![vec![1, 2]], vec![vec![1]]],
    )
    .map_err(stringify)?;
    let u = SetValuedTableau::new(
        p(&[2, 1]),
        3,
        vec![vec![vec![1], vec![1, 3]], vec![vec![2, 3]]],
    )
    .map_err(stringify)?;
    let r = rectify(&t, &u).map_err(stringify)?;
    if r.to_string() != "1,{1,2},2/2" {
        return fail(format!("worked rectification gave {r}"));
    }
    let shape = SkewShape::new(p(&[1, 1]), p(&[1])).map_err(stringify)?;
    let t = SkewSetValuedTableau::new(shape, 2, vec![vec![], vec![vec![1, 2]]]).map_err(stringify)?;
    let u = SetValuedTableau::new(p(&[1]), 1, vec![vec![vec![1]]]).map_err(stringify)?;
    let v = SetValuedTableau::new(p(&[1]), 2, vec![vec![vec![1, 2]]]).map_err(stringify)?;
    let ru = rectify(&t, &u).map_err(stringify)?;
    let rv = rectify(&t, &v).map_err(stringify)?;
    if ru.to_string() != "1/2" || rv.to_string() != "{1,2}" {
        return fail(format!("non-confluence pair gave {ru} and {rv}"));
    }
    let shape = SkewShape::new(p(&[3, 2]), p(&[2])).map_err(stringify)?;
    let t = SkewSetValuedTableau::new(shape, 2, vec![vec![vec![1, 2]], vec![vec![1, 2], vec![2]]])
        .map_err(stringify)?;
    let u = SetValuedTableau::new(p(&[2]), 3, vec![vec![vec![1], vec![2, 3]]]).map_err(stringify)?;
    let r = rectify(&t, &u).map_err(stringify)?;
    if r.to_string() != "1,{1,2},2/2" {
        return fail(format!("general-shape example gave {r}"));
    }
    Ok(())
}

/// Checks reduced-signature invariance of the unbarred part through every
/// infusion step, over an exhaustive corpus of (T, U) pairs on small skew
/// shapes plus the worked example. Returns `(violations, total, samples)`;
/// the claim fails for certain set-valued rectification orders, so callers
/// report rather than assume.
pub fn kjdt_signature_report() -> (usize, usize, Vec<String>) {
    use crate::kjdt::{LayeredTableau, Letter, SkewSetValuedTableau};
    use crate::shape::SkewShape;
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    let mut total = 0usize;
    let mut violations = 0usize;
    let mut samples = Vec::new();
    let mut run = |t: &SkewSetValuedTableau, u: &SetValuedTableau| {
        total += 1;
        let mut layered = LayeredTableau::layer(u, t).expect("layerable");
        let n = t.n;
        let before: Vec<(usize, usize)> = (1..n).map(|i| layered.unbarred_signature(i)).collect();
        let movers: Vec<Letter> = (1..=u.n()).rev().map(Letter::Barred).collect();
        let mut ok = true;
        for mover in movers {
            for _ in 0..n {
                layered.b_step(mover).expect("b-step");
                let now: Vec<(usize, usize)> = (1..n).map(|i| layered.unbarred_signature(i)).collect();
                if now != before {
                    ok = false;
                }
            }
        }
        if !ok {
            violations += 1;
            if samples.len() < 5 {
                samples.push(format!("T = {:?} with U = {u}", t.rows));
            }
        }
    };
    // The worked infusion example.
    let shape = SkewShape::new(p(&[4, 2, 1]), p(&[2, 1])).unwrap();
    let t = SkewSetValuedTableau::new(
        shape,
        2,
        vec![vec![vec![2], vec![2]], vec![vec![1, 2]], vec![vec![1]]],
    )
    .unwrap();
    let u = SetValuedTableau::new(p(&[2, 1]), 3, vec![vec![vec![1], vec![1, 3]], vec![vec![2, 3]]])
        .unwrap();
    run(&t, &u);
    // Exhaustive small corpus.
    for (outer, inner) in [
        (vec![2, 1], vec![1]),
        (vec![1, 1], vec![1]),
        (vec![2, 2], vec![2]),
        (vec![2, 2], vec![1]),
    ] {
        let sk = SkewShape::new(p(&outer), p(&inner)).unwrap();
        let cells = sk.cells();
        let subsets: Vec<Vec<u8>> = vec![vec![1], vec![2], vec![1, 2]];
        let k = cells.len();
        for mut idx in 0..subsets.len().pow(k as u32) {
            let mut pick = Vec::new();
            for _ in 0..k {
                pick.push(subsets[idx % subsets.len()].clone());
                idx /= subsets.len();
            }
            let mut rows: Vec<Vec<Vec<u8>>> = (0..sk.outer.rows()).map(|_| Vec::new()).collect();
            for (j, &(r, _)) in cells.iter().enumerate() {
                rows[r].push(pick[j].clone());
            }
            let Ok(t) = SkewSetValuedTableau::new(sk.clone(), 2, rows) else { continue };
            for um in 1..=2u8 {
                for u in enumerate_svt(&sk.inner, um, None) {
                    run(&t, &u);
                }
            }
        }
    }
    (violations, total, samples)
}

/// K-crystal properties (K.1)–(K.3) and heuristics (H.1)–(H.2) on the given
/// shape, over every permutation of `S_n` and all of its reduced words.
pub fn kcrystal_suite_for(shape: &Partition, n: u8) -> Suite {
    let graph = CrystalGraph::build(shape, n, true).map_err(stringify)?;
    // (K.1): connectivity with K edges, unique minimal highest weight.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); graph.nodes().len()];
    for e in &graph.edges {
        adj[e.from].push(e.to);
        adj[e.to].push(e.from);
    }
    if !graph.nodes().is_empty() {
        let mut seen = vec![false; graph.nodes().len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        if count != graph.nodes().len() {
            return fail(format!("K-graph of {shape}, n={n} is disconnected"));
        }
    }
    let minimal: Vec<&SetValuedTableau> = graph
        .nodes()
        .iter()
        .filter(|t| {
            (1..n).all(|i| {
                e_svt(t, i).is_none() && e_k(t, i).map(|o| o.is_none()).unwrap_or(false)
            })
        })
        .collect();
    let u = SetValuedTableau::highest_weight(shape, n).map_err(stringify)?;
    if minimal.len() != 1 || *minimal[0] != u {
        return fail(format!("minimal highest weight not unique for {shape}, n={n}"));
    }
    // (H.1) and (H.2).
    for t in graph.nodes() {
        for i in 1..n {
            if let Some(kt) = f_k(t, i).map_err(stringify)? {
                if f_k(&kt, i).map_err(stringify)?.is_some() {
                    return fail(format!("(H.1) f^K f^K != 0 at {t}"));
                }
                if e_svt(t, i).is_some() || f_svt(t, i).is_none() {
                    return fail(format!("(H.2) violated at {t}, i={i}"));
                }
                if e_k(&kt, i).map_err(stringify)?.as_ref() != Some(t) {
                    return fail(format!("e^K f^K != id at {t}"));
                }
                if kt.excess() != t.excess() + 1 {
                    return fail(format!("f^K does not raise excess at {t}"));
                }
            }
            if let Some(et) = e_k(t, i).map_err(stringify)? {
                if f_k(&et, i).map_err(stringify)?.as_ref() != Some(t) {
                    return fail(format!("f^K e^K != id at {t}"));
                }
            }
        }
    }
    // (K.2) and (K.3) over all w and all reduced words.
    for w in Perm::all(n as usize) {
        let words = w.all_reduced_words();
        let first = k_demazure(shape, n, &words[0]).map_err(stringify)?;
        for word in &words[1..] {
            let d = k_demazure(shape, n, word).map_err(stringify)?;
            if d.node_set() != first.node_set() {
                return fail(format!(
                    "(K.2) fails for {shape}, n={n}, w={:?}: words {:?} vs {:?}",
                    w.one_line(), words[0], word
                ));
            }
        }
        let character = k_character(&first);
        let lascoux = lascoux_of_w_lambda(shape, n, &w).map_err(stringify)?;
        if character != lascoux {
            return fail(format!(
                "(K.3) fails for {shape}, n={n}, w={:?}: char {} vs L {}",
                w.one_line(), character.render(), lascoux.render()
            ));
        }
    }
    // i-K-strings partition the crystal; Demazure pieces meet strings in
    // ∅, the whole string, or the head (single-column statement).
    for i in 1..n {
        let strings = i_k_strings(shape, n, i).map_err(stringify)?;
        if shape.part(0) == 1 {
            for w in Perm::all(n as usize) {
                let d = k_demazure(shape, n, &w.reduced_word()).map_err(stringify)?;
                for s in &strings {
                    let inside: Vec<bool> = s.members().map(|m| d.contains(m)).collect();
                    let count = inside.iter().filter(|&&b| b).count();
                    let ok = count == 0
                        || count == inside.len()
                        || (count == 1 && d.contains(&s.head));
                    if !ok {
                        return fail(format!(
                            "string intersection not ∅/S/head for {shape}, n={n}, i={i}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Runs the K-crystal suite over the desk-scale ranges: rows `kΛ_1` for `k ≤ 3`,
/// `n ≤ 4`, and columns `Λ_k` for `k < n ≤ 5`.
pub fn kcrystal_suite() -> Suite {
    for n in 2..=4u8 {
        for k in 1..=3usize {
            kcrystal_suite_for(&Partition::new(vec![k]).unwrap(), n)?;
        }
    }
    for n in 2..=5u8 {
        for k in 1..n as usize {
            kcrystal_suite_for(&Partition::new(vec![1; k]).unwrap(), n)?;
        }
    }
    Ok(())
}

/// Every suite at the documented desk-scale bounds.
pub fn verify_all() -> Vec<(&'static str, Suite)> {
    vec![
        ("crystal-axioms", crystal_axioms_suite(3, &[3, 4])),
        ("reading-words", reading_word_suite(3, &[3, 4])),
        ("involutions", involution_suite(3, &[3])),
        ("operators", operator_suite(3, &[3, 4])),
        ("schur-expansion", schur_expansion_suite(3, &[3, 4])),
        ("cross-model", cross_model_suite(3, &[3, 4])),
        ("hecke", hecke_suite(3, 5)),
        ("kjdt", kjdt_suite()),
        ("kcrystal", kcrystal_suite()),
    ]
}
