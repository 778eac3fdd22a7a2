use std::fs;
use std::io::Write;
use std::path::Path;

use dyckd::incidence::{build, invert, IncidenceMatrix, WeightKind};
use dyckd::tiling::{
    build_region, enumerate_tilings, genfun_lower, genfun_pair, genfun_upper, svg, tilings_above,
    Class, PathType, Statistic, Tiling,
};
use dyckd::treeform::{build_tree, omega};
use dyckd::{PathWord, PolyQ};
use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::{verify, ClassArg, Cli, CliError, Command, Format, MatrixKind, TypeArg, WeightArg};

type Out<'a> = &'a mut dyn Write;

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn emit(out: Out, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(io_err(Path::new("<stdout>")))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn parse_word(s: &str, cap: usize, allow_empty: bool) -> Result<PathWord, CliError> {
    if s.is_empty() && !allow_empty {
        return Err(CliError::Usage("word must be nonempty".into()));
    }
    let w: PathWord = s.parse()?;
    if w.len() > cap {
        return Err(CliError::Usage(format!(
            "word length {} exceeds the cap {cap} (raise it with --cap)",
            w.len()
        )));
    }
    Ok(w)
}

fn path_type(t: TypeArg) -> PathType {
    match t {
        TypeArg::A => PathType::A,
        TypeArg::B => PathType::B,
        TypeArg::D => PathType::D,
    }
}

fn class(c: ClassArg) -> Class {
    match c {
        ClassArg::Inclusive => Class::CoverInclusive,
        ClassArg::Exclusive => Class::CoverExclusive,
    }
}

fn statistic(w: WeightArg) -> Statistic {
    match w {
        WeightArg::Art => Statistic::Art,
        WeightArg::Tiles => Statistic::Tiles,
        WeightArg::Area => Statistic::Area,
    }
}

fn reject_format(f: Format, allowed: &[Format]) -> Result<(), CliError> {
    if allowed.contains(&f) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("format {f:?} is not available for this command")))
    }
}

pub fn run(cli: &Cli, out: Out) -> Result<(), CliError> {
    match &cli.command {
        Command::Matrix {
            n,
            epsilon,
            kind,
            format,
        } => cmd_matrix(cli.cap, *n, *epsilon, *kind, *format, out),
        Command::Genfun {
            lambda,
            mu,
            path_type: t,
            class: c,
            weight,
            format,
        } => cmd_genfun(cli.cap, lambda.as_deref(), mu.as_deref(), *t, *c, *weight, *format, out),
        Command::Tilings {
            lambda,
            mu,
            path_type: t,
            class: c,
            filter_art,
            render,
            format,
        } => cmd_tilings(
            cli.cap,
            lambda,
            mu.as_deref(),
            *t,
            *c,
            *filter_art,
            render.as_deref(),
            *format,
            out,
        ),
        Command::Tree { lambda, format } => cmd_tree(cli.cap, lambda, *format, out),
        Command::Verify { max_length, json } => {
            if *max_length > cli.cap {
                return Err(CliError::Usage(format!(
                    "--max-length {max_length} exceeds the cap {}",
                    cli.cap
                )));
            }
            let report = verify::run(*max_length);
            if *json {
                emit(out, &to_json(&report))?;
            } else {
                emit(out, &report.to_table())?;
            }
            match report.failed() {
                0 => Ok(()),
                k => Err(CliError::Identity(k)),
            }
        }
    }
}

pub fn matrix(n: usize, eps: u8, kind: MatrixKind) -> Result<IncidenceMatrix, CliError> {
    let m = match kind {
        MatrixKind::M | MatrixKind::Minv => build(n, eps, WeightKind::I),
        MatrixKind::N | MatrixKind::Ninv => build(n, eps, WeightKind::II),
    };
    Ok(match kind {
        MatrixKind::Minv | MatrixKind::Ninv => invert(&m)?,
        _ => m,
    })
}

fn matrix_text(m: &IncidenceMatrix) -> String {
    let mut rows: Vec<Vec<String>> = vec![std::iter::once(String::new())
        .chain(m.basis.iter().map(|b| b.to_string()))
        .collect()];
    for (b, row) in m.basis.iter().zip(&m.entries) {
        rows.push(
            std::iter::once(b.to_string())
                .chain(row.iter().map(|e| e.to_string()))
                .collect(),
        );
    }
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
    }
    s
}

fn cmd_matrix(cap: usize, n: usize, eps: u8, kind: MatrixKind, format: Format, out: Out) -> Result<(), CliError> {
    if n == 0 || n > cap {
        return Err(CliError::Usage(format!("--n must be in 1..={cap}")));
    }
    if eps > 1 {
        return Err(CliError::Usage("--epsilon must be 0 or 1".into()));
    }
    let m = matrix(n, eps, kind)?;
    let text = match format {
        Format::Text => matrix_text(&m),
        Format::Csv => m.to_csv(),
        Format::Latex => m.to_latex() + "\n",
        Format::Json => to_json(&json!({
            "n": n,
            "epsilon": eps,
            "kind": format!("{kind:?}"),
            "basis": m.basis,
            "entries": m.entries,
        })),
        Format::Dot => return reject_format(format, &[]),
    };
    emit(out, &text)
}

fn poly_report(label: &str, p: &PolyQ, format: Format) -> Result<String, CliError> {
    reject_format(format, &[Format::Text, Format::Json, Format::Latex])?;
    Ok(match format {
        Format::Json => to_json(&json!({
            "quantity": label,
            "polynomial": p,
            "text": p.to_string(),
            "at_q_equals_1": p.eval_at_one().to_string(),
        })),
        Format::Latex => p.to_latex() + "\n",
        _ => format!("{label} = {p}\nat q=1: {}\n", p.eval_at_one()),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_genfun(
    cap: usize,
    lambda: Option<&str>,
    mu: Option<&str>,
    t: TypeArg,
    c: ClassArg,
    weight: WeightArg,
    format: Format,
    out: Out,
) -> Result<(), CliError> {
    let (pt, st) = (path_type(t), statistic(weight));
    let (label, p) = match (lambda, mu, c) {
        (Some(l), Some(m), _) => {
            let (l, m) = (parse_word(l, cap, false)?, parse_word(m, cap, false)?);
            (format!("{l} / {m}"), genfun_pair(&l, &m, pt, class(c), st)?)
        }
        (Some(l), None, ClassArg::Inclusive) => {
            let l = parse_word(l, cap, false)?;
            (format!("{l} / *"), genfun_lower(&l, pt, st)?)
        }
        (None, Some(m), ClassArg::Exclusive) => {
            let m = parse_word(m, cap, false)?;
            (format!("* / {m}"), genfun_upper(&m, pt, st)?)
        }
        _ => {
            return Err(CliError::Usage(
                "give --lambda and --mu, or --lambda alone (inclusive), or --mu alone (exclusive)".into(),
            ))
        }
    };
    emit(out, &poly_report(&label, &p, format)?)
}

#[derive(Serialize)]
struct TilingRecord<'a> {
    lambda: &'a PathWord,
    mu: &'a PathWord,
    area: usize,
    tiles: usize,
    art: usize,
    pieces: &'a [dyckd::tiling::Tile],
}

#[derive(Serialize)]
struct Artifact {
    file: String,
    mu: String,
    art: usize,
    tiles: usize,
    area: usize,
    sha256: String,
}

#[allow(clippy::too_many_arguments)]
fn cmd_tilings(
    cap: usize,
    lambda: &str,
    mu: Option<&str>,
    t: TypeArg,
    c: ClassArg,
    filter_art: Option<usize>,
    render: Option<&Path>,
    format: Format,
    out: Out,
) -> Result<(), CliError> {
    reject_format(format, &[Format::Text, Format::Json])?;
    let (pt, cl) = (path_type(t), class(c));
    let lam = parse_word(lambda, cap, false)?;
    let mut found: Vec<(PathWord, Tiling)> = match mu {
        Some(m) => {
            let m = parse_word(m, cap, false)?;
            let region = build_region(&lam, &m, pt)?;
            enumerate_tilings(&region, cl)
                .into_iter()
                .map(|t| (m.clone(), t))
                .collect()
        }
        None => tilings_above(&lam, pt, cl)?,
    };
    if let Some(a) = filter_art {
        found.retain(|(_, t)| t.art == a);
    }

    if let Some(dir) = render {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
        let mut artifacts = Vec::new();
        for (k, (m, t)) in found.iter().enumerate() {
            let region = build_region(&lam, m, pt)?;
            let body = svg::render(&region, t);
            let file = format!("tiling_{k:03}.svg");
            let path = dir.join(&file);
            fs::write(&path, &body).map_err(io_err(&path))?;
            artifacts.push(Artifact {
                file,
                mu: m.to_string(),
                art: t.art,
                tiles: t.tiles_count,
                area: t.area,
                sha256: format!("{:x}", Sha256::digest(body.as_bytes())),
            });
        }
        let manifest = json!({
            "command": "tilings",
            "arguments": {
                "lambda": lam,
                "mu": mu,
                "type": format!("{pt}"),
                "class": cl,
                "filter_art": filter_art,
            },
            "artifacts": artifacts,
        });
        let path = dir.join("manifest.json");
        fs::write(&path, to_json(&manifest)).map_err(io_err(&path))?;
    }

    let text = match format {
        Format::Json => {
            let recs: Vec<TilingRecord> = found
                .iter()
                .map(|(m, t)| TilingRecord {
                    lambda: &lam,
                    mu: m,
                    area: t.area,
                    tiles: t.tiles_count,
                    art: t.art,
                    pieces: &t.tiles,
                })
                .collect();
            to_json(&recs)
        }
        _ => {
            let mut s = format!("{} tiling(s)\n", found.len());
            for (m, t) in &found {
                s.push_str(&format!(
                    "{lam} / {m}: area={} tiles={} art={}",
                    t.area, t.tiles_count, t.art
                ));
                for tile in &t.tiles {
                    let cells: Vec<String> = tile.cells.iter().map(|(x, y)| format!("({x},{y})")).collect();
                    s.push_str(&format!(" [{:?} {}]", tile.kind, cells.join(" ")));
                }
                s.push('\n');
            }
            s
        }
    };
    emit(out, &text)
}

fn cmd_tree(cap: usize, lambda: &str, format: Format, out: Out) -> Result<(), CliError> {
    reject_format(format, &[Format::Text, Format::Json, Format::Dot])?;
    let lam = parse_word(lambda, cap, true)?;
    let tree = build_tree(&lam);
    let value = match omega(&tree) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("{}", to_json(&tree));
            return Err(e.into());
        }
    };
    let text = match format {
        Format::Json => to_json(&json!({
            "lambda": lam,
            "tree": tree,
            "omega": value,
            "omega_text": value.to_string(),
        })),
        Format::Dot => tree.to_dot(),
        _ => {
            let mut s = format!("tree: {}\n", tree.to_bracket());
            for &(t, h) in &tree.arrows {
                s.push_str(&format!(
                    "arrow: {:?} -> {:?}\n",
                    tree.edge_path(t).unwrap_or_default(),
                    tree.edge_path(h).unwrap_or_default()
                ));
            }
            s.push_str(&format!("omega = {value}\n"));
            s
        }
    };
    emit(out, &text)
}
