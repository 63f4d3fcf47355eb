use anyhow::{anyhow, bail, Context, Result};
use clap::{Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::path::PathBuf;
use svtcrystal::crystal::CrystalGraph;
use svtcrystal::expand::schur_expansion;
use svtcrystal::hecke::{hecke_insert, hecke_reverse, TwoLineArray};
use svtcrystal::kcrystal::{k_character, k_demazure};
use svtcrystal::kjdt::{rectify, two_box_rule, SkewSetValuedTableau};
use svtcrystal::models::{enumerate_eyd, enumerate_marked_gt, marked_gt_to_svt};
use svtcrystal::poly::{apply_word, BetaPolynomial, OperatorKind, ReducedWord};
use svtcrystal::tableaux::{enumerate_svt, IncreasingTableau, SetValuedTableau};
use svtcrystal::verify;
use svtcrystal::Partition;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

pub fn parse_shape(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() || s == "0" || s == "()" {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse::<usize>()).collect();
    let parts = parts.map_err(|e| format!("bad shape {s:?}: {e}"))?;
    Partition::new(parts).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
pub enum HeckeCommand {
    /// Insert a two-line array ("1 2 2 / 2 2 1", or a file via --input).
    Insert {
        array: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Reverse insertion of a JSON pair {"p": [[..]], "q": {tableau}}.
    Reverse {
        input: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum KjdtCommand {
    /// Print the full two-box rectification table for entries up to n.
    Table {
        #[arg(long, default_value_t = 3)]
        n: u8,
    },
    /// Apply the two-box rule to single boxes T and S, e.g. "2" and "1,2".
    TwoBox {
        t: String,
        s: String,
        #[arg(long, default_value_t = 3)]
        n: u8,
    },
}

fn emit(out_dir: &Option<PathBuf>, name: &str, contents: &str) -> Result<()> {
    match out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let path = dir.join(name);
            std::fs::write(&path, contents)?;
            println!("wrote {}", path.display());
        }
        None => print!("{contents}"),
    }
    Ok(())
}

pub fn run(command: crate::Command, out_dir: Option<PathBuf>) -> Result<()> {
    match command {
        crate::Command::Enumerate { shape, n, max_excess, count_only, format } => {
            let tableaux = enumerate_svt(&shape, n, max_excess);
            if count_only {
                let graph = CrystalGraph::build(&shape, n, false).map_err(anyhow::Error::msg)?;
                let components = graph.components().map_err(anyhow::Error::msg)?;
                match format {
                    Format::Json => println!(
                        "{}",
                        serde_json::json!({
                            "schema": "enumerate-count/1",
                            "shape": shape.parts(),
                            "n": n,
                            "nodes": tableaux.len(),
                            "components": components.len(),
                        })
                    ),
                    _ => println!(
                        "shape {shape}, n = {n}: {} tableaux, {} components",
                        tableaux.len(),
                        components.len()
                    ),
                }
                return Ok(());
            }
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schema": "enumerate/1",
                        "shape": shape.parts(),
                        "n": n,
                        "tableaux": tableaux,
                    })
                ),
                _ => {
                    for t in &tableaux {
                        println!("{t}");
                    }
                }
            }
            Ok(())
        }
        crate::Command::CrystalGraph { shape, n, k_edges, format, out } => {
            let graph = CrystalGraph::build(&shape, n, k_edges).map_err(anyhow::Error::msg)?;
            let rendered = match format {
                Format::Dot => graph.to_dot(),
                Format::Json => format!("{}\n", graph.to_json()),
                Format::Text => {
                    let mut s = String::new();
                    for (k, t) in graph.nodes().iter().enumerate() {
                        let _ = writeln!(s, "{k}: {t}");
                    }
                    for e in &graph.edges {
                        let _ = writeln!(
                            s,
                            "{} -{}-> {}{}",
                            e.from,
                            e.index,
                            e.to,
                            if e.kind == svtcrystal::EdgeKind::K { " (K)" } else { "" }
                        );
                    }
                    s
                }
            };
            match out {
                Some(path) => {
                    std::fs::write(&path, rendered)?;
                    println!("wrote {}", path.display());
                }
                None => emit(&out_dir, "graph", &rendered)?,
            }
            Ok(())
        }
        crate::Command::Expand { shape, n, format } => {
            let table = schur_expansion(&shape, n).map_err(anyhow::Error::msg)?;
            match format {
                Format::Json => {
                    let terms: Vec<_> = table
                        .multiplicities
                        .iter()
                        .map(|(mu, m)| {
                            serde_json::json!({
                                "mu": mu.parts(),
                                "M": m,
                                "beta_power": mu.size() - shape.size(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "schema": "expand/1",
                            "lambda": shape.parts(),
                            "n": n,
                            "terms": terms,
                        })
                    );
                }
                _ => {
                    println!("G_{shape}(x_1..x_{n}; b) =");
                    for (mu, m) in &table.multiplicities {
                        let beta = mu.size() - shape.size();
                        let beta_str = match beta {
                            0 => String::new(),
                            1 => "b·".into(),
                            k => format!("b^{k}·"),
                        };
                        let m_str = if *m == 1 { String::new() } else { format!("{m}·") };
                        println!("  + {beta_str}{m_str}s_{mu}");
                    }
                }
            }
            Ok(())
        }
        crate::Command::Verify { suite, max, n } => {
            let run_one = |name: &str| -> Option<std::result::Result<(), String>> {
                match name {
                    "crystal-axioms" => Some(verify::crystal_axioms_suite(max, &n)),
                    "reading-words" => Some(verify::reading_word_suite(max, &n)),
                    "involutions" => Some(verify::involution_suite(max.min(3), &[3])),
                    "operators" => Some(verify::operator_suite(max, &n)),
                    "schur-expansion" => Some(verify::schur_expansion_suite(max, &n)),
                    "cross-model" => Some(verify::cross_model_suite(max, &n)),
                    "hecke" => Some(verify::hecke_suite(3, 5)),
                    "kjdt" => Some(verify::kjdt_suite()),
                    "kcrystal" => Some(verify::kcrystal_suite()),
                    _ => None,
                }
            };
            let names: Vec<&str> = if suite == "all" {
                vec![
                    "crystal-axioms",
                    "reading-words",
                    "involutions",
                    "operators",
                    "schur-expansion",
                    "cross-model",
                    "hecke",
                    "kjdt",
                    "kcrystal",
                ]
            } else {
                vec![suite.as_str()]
            };
            let mut failed = false;
            for name in names {
                let outcome = run_one(name).ok_or_else(|| anyhow!("unknown suite {name}"))?;
                match outcome {
                    Ok(()) => println!("{name}: pass"),
                    Err(counterexample) => {
                        failed = true;
                        println!("{name}: FAIL — {counterexample}");
                    }
                }
                if name == "kjdt" {
                    let (violations, total, samples) = verify::kjdt_signature_report();
                    println!(
                        "kjdt signature report: {}/{} infusions preserve reduced signatures{}",
                        total - violations,
                        total,
                        if violations > 0 { " (fails for some set-valued rectification orders)" } else { "" }
                    );
                    for s in samples {
                        println!("  signature changed: {s}");
                    }
                }
            }
            if failed {
                bail!("verification failed");
            }
            Ok(())
        }
        crate::Command::Hecke { command } => match command {
            HeckeCommand::Insert { array, input } => {
                let text = match (array, input) {
                    (Some(a), _) => a,
                    (None, Some(path)) => std::fs::read_to_string(path)?,
                    (None, None) => bail!("pass the array inline or via --input"),
                };
                let array = TwoLineArray::parse(&text).map_err(anyhow::Error::msg)?;
                let (p, q) = hecke_insert(&array);
                println!(
                    "{}",
                    serde_json::json!({
                        "schema": "hecke-insert/1",
                        "array": array.render(),
                        "factorization": factorization_string(&array),
                        "p": p.cells,
                        "q": q,
                    })
                );
                Ok(())
            }
            HeckeCommand::Reverse { input } => {
                let text = std::fs::read_to_string(&input)
                    .with_context(|| format!("reading {}", input.display()))?;
                let value: serde_json::Value = serde_json::from_str(&text)?;
                let p_cells: Vec<Vec<u8>> = serde_json::from_value(
                    value.get("p").cloned().ok_or_else(|| anyhow!("missing field p"))?,
                )?;
                let q: SetValuedTableau = serde_json::from_value(
                    value.get("q").cloned().ok_or_else(|| anyhow!("missing field q"))?,
                )?;
                let p = IncreasingTableau::new(p_cells).map_err(anyhow::Error::msg)?;
                let array = hecke_reverse(&p, &q).map_err(anyhow::Error::msg)?;
                println!("{}", array.render());
                Ok(())
            }
        },
        crate::Command::Rectify { order, tableau } => {
            let t: SkewSetValuedTableau =
                serde_json::from_str(&std::fs::read_to_string(&tableau)?)?;
            let u: SetValuedTableau = serde_json::from_str(&std::fs::read_to_string(&order)?)?;
            let r = rectify(&t, &u).map_err(anyhow::Error::msg)?;
            println!("{r}");
            Ok(())
        }
        crate::Command::Kjdt { command } => match command {
            KjdtCommand::Table { n } => {
                let contents = render_two_box_table(n)?;
                emit(&out_dir, &format!("table-two-box-n{n}.txt"), &contents)
            }
            KjdtCommand::TwoBox { t, s, n } => {
                let t_box = parse_box(&t)?;
                let s_box = parse_box(&s)?;
                let r = two_box_rule(&t_box, &s_box, n).map_err(anyhow::Error::msg)?;
                println!("{r}");
                Ok(())
            }
        },
        crate::Command::Kdemazure { shape, n, word, format } => {
            let shape = parse_row_or_column(&shape)?;
            let word: Vec<usize> = if word.trim().is_empty() {
                Vec::new()
            } else {
                word.split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()?
            };
            let d = k_demazure(&shape, n, &word).map_err(anyhow::Error::msg)?;
            let character = k_character(&d);
            match format {
                Format::Json => {
                    let nodes: Vec<&SetValuedTableau> = d.nodes().collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "schema": "kdemazure/1",
                            "shape": shape.parts(),
                            "n": n,
                            "word": word,
                            "nodes": nodes,
                            "character": character.render(),
                            "character_terms": character.to_json_terms(),
                        })
                    );
                }
                Format::Dot => {
                    let graph = CrystalGraph::build(&shape, n, true).map_err(anyhow::Error::msg)?;
                    let mut s = String::from("digraph kdemazure {\n  rankdir=TB;\n  node [shape=box];\n");
                    let member: Vec<bool> =
                        graph.nodes().iter().map(|t| d.contains(t)).collect();
                    for (k, t) in graph.nodes().iter().enumerate() {
                        if member[k] {
                            let _ = writeln!(s, "  n{k} [label=\"{t}\"];");
                        }
                    }
                    for e in &graph.edges {
                        if member[e.from] && member[e.to] {
                            let style = if e.kind == svtcrystal::EdgeKind::K { "dashed" } else { "solid" };
                            let _ = writeln!(
                                s,
                                "  n{} -> n{} [label=\"{}\", style={}];",
                                e.from, e.to, e.index, style
                            );
                        }
                    }
                    s.push_str("}\n");
                    emit(&out_dir, "kdemazure.dot", &s)?;
                }
                Format::Text => {
                    println!("{} nodes:", d.len());
                    for t in d.nodes() {
                        println!("  {t}");
                    }
                    println!("character: {}", character.render());
                }
            }
            Ok(())
        }
        crate::Command::Gt { shape, n, count_only, format } => {
            let patterns = enumerate_marked_gt(&shape, n);
            if count_only {
                println!("{}", patterns.len());
                return Ok(());
            }
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schema": "marked-gt/1",
                        "shape": shape.parts(),
                        "n": n,
                        "patterns": patterns,
                    })
                ),
                _ => {
                    for pat in &patterns {
                        println!("{}", pat.ascii());
                        let t = marked_gt_to_svt(pat, n).map_err(anyhow::Error::msg)?;
                        println!("  -> {t}\n");
                    }
                }
            }
            Ok(())
        }
        crate::Command::Eyd { shape, n, count_only, format } => {
            let diagrams = enumerate_eyd(&shape, n);
            if count_only {
                println!("{}", diagrams.len());
                return Ok(());
            }
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schema": "eyd/1",
                        "shape": shape.parts(),
                        "n": n,
                        "diagrams": diagrams,
                    })
                ),
                _ => {
                    for e in &diagrams {
                        println!("{e}");
                    }
                }
            }
            Ok(())
        }
        crate::Command::Reproduce { target } => reproduce(&target, &out_dir),
    }
}

fn factorization_string(array: &TwoLineArray) -> String {
    array
        .to_decreasing_factorization()
        .iter()
        .map(|factor| {
            let letters: Vec<String> = factor.iter().map(|a| a.to_string()).collect();
            format!("({})", letters.join(" "))
        })
        .collect()
}

fn parse_box(s: &str) -> Result<Vec<u8>> {
    let mut out: Vec<u8> = s
        .split(',')
        .map(|t| t.trim().parse::<u8>())
        .collect::<std::result::Result<_, _>>()?;
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        bail!("box must be nonempty");
    }
    Ok(out)
}

fn parse_row_or_column(s: &str) -> Result<Partition> {
    let (kind, k) = s
        .split_once(':')
        .ok_or_else(|| anyhow!("shape must look like row:2 or col:2"))?;
    let k: usize = k.trim().parse()?;
    match kind {
        "row" => Partition::new(vec![k]).map_err(anyhow::Error::msg),
        "col" => Partition::new(vec![1; k]).map_err(anyhow::Error::msg),
        other => bail!("unknown shape kind {other}"),
    }
}

fn render_two_box_table(n: u8) -> Result<String> {
    let mut boxes: Vec<Vec<u8>> = Vec::new();
    for mask in 1u32..(1 << n) {
        let b: Vec<u8> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        boxes.push(b);
    }
    boxes.sort_by_key(|b| (b.len(), b.clone()));
    let label = |b: &[u8]| {
        let s: Vec<String> = b.iter().map(|v| v.to_string()).collect();
        s.join(",")
    };
    let mut out = String::new();
    let _ = writeln!(out, "two-box rectifications for entries up to {n} (rows T, columns S)");
    for t in &boxes {
        for s in &boxes {
            let r = two_box_rule(t, s, n).map_err(anyhow::Error::msg)?;
            let _ = writeln!(out, "T={:<7} S={:<7} -> {}", label(t), label(s), r);
        }
    }
    Ok(out)
}

fn reproduce(target: &str, out_dir: &Option<PathBuf>) -> Result<()> {
    match target {
        "figure-1" => {
            let graph = CrystalGraph::build(&parse_shape("2,1").unwrap(), 3, false)
                .map_err(anyhow::Error::msg)?;
            emit(out_dir, "figure-1.dot", &graph.to_dot())
        }
        "figure-2" => {
            let graph = CrystalGraph::build(&parse_shape("2").unwrap(), 3, true)
                .map_err(anyhow::Error::msg)?;
            emit(out_dir, "figure-2.dot", &graph.to_dot())
        }
        "figure-3" => {
            let graph = CrystalGraph::build(&parse_shape("1,1").unwrap(), 4, true)
                .map_err(anyhow::Error::msg)?;
            emit(out_dir, "figure-3.dot", &graph.to_dot())
        }
        "table-1" => emit(out_dir, "table-1.txt", &render_two_box_table(3)?),
        "appendix-a" => {
            let x31 = BetaPolynomial::monomial(4, 0, &[3, 1, 0, 0], 1.into());
            let x21 = BetaPolynomial::monomial(4, 0, &[2, 1, 0, 0], 1.into());
            let dl = |f: &BetaPolynomial, w: &[usize]| {
                apply_word(f, &ReducedWord(w.to_vec()), OperatorKind::DemazureLascoux)
                    .map_err(anyhow::Error::msg)
            };
            let mut out = String::new();
            let _ = writeln!(out, "DL(x1^3*x2, 1) = {}", dl(&x31, &[1])?.render_sage());
            let _ = writeln!(out, "DL(x1^3*x2, 2) = {}", dl(&x31, &[2])?.render_sage());
            let _ = writeln!(out, "DL(x1^3*x2, 3) = {}", dl(&x31, &[3])?.render_sage());
            let _ = writeln!(out, "DL(x1^2*x2, [2,1]) = {}", dl(&x21, &[2, 1])?.render_sage());
            let _ = writeln!(out, "DL(x1^2*x2, [1,2]) = {}", dl(&x21, &[1, 2])?.render_sage());
            emit(out_dir, "appendix-a.txt", &out)
        }
        other => bail!("unknown reproduction target {other}; use figure-1, figure-2, figure-3, table-1 or appendix-a"),
    }
}
