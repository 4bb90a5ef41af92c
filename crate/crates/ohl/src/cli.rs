//! Batch command-line front end.
//!
//! Verbs: `mul`, `comul`, `compose`, `map`, `dims`, `primitives`, `verify`,
//! `series`. Every verb reads basis elements (or linear combinations) in the
//! same plain-text grammar the library prints, does exact rational
//! arithmetic, and writes one canonical result to stdout — text by default,
//! JSON lines with `--json`.
//!
//! Exit codes: `0` success (for `verify`: every law held), `1` at least one
//! law failed, `2` usage, parse, or domain errors.
//!
//! Grammars: permutations `[3,1,2]` (empty `[]`), set compositions
//! `{3,4}|{1}` (empty `{}`, compact digit form `(34,1,56,2)` also accepted),
//! planar trees `(| (| |))` (leaf `|`), words `ab` (empty `ε` or ``),
//! one-dimensional graded elements `X^3`. A linear combination is `0` or
//! terms joined by ` + `, each `coeff*basis` or a bare basis element
//! (coefficient 1); coefficients are integers or fractions like `-1/3`.
//!
//! Determinism: output is byte-identical across runs and `--jobs` values.
//! `OHL_SEED` permutes only the *execution order* of `verify` tasks (a
//! scheduling shake-out); it never skips work and never changes output.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Mutex;

use clap::{Parser, Subcommand};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use thiserror::Error;

use crate::associahedron::{
    backslash, binary_trees, dend_compose, dend_coproduct, dend_projection, dend_star,
    dend_star_basis, generator_tree, phi, phi0, psi, psi0, sector_insert, td_compose,
    td_star_basis, theta, tree_bar_coproduct, tree_coproduct, trees, AssociahedronError,
    PlanarTree,
};
use crate::bialgebra_lab::{
    bar_coproduct, check_associative, check_coassociative, check_cocommutative, check_counit,
    check_custom, check_hopf_compat, check_map_equality, check_product_equality,
    check_transpose_duality, check_unit, check_unital_infinitesimal, hat_coproduct, hat_of_with,
    primitive_dims, tree_basis, CheckReport, CheckStatus, CheckWitness, CtdStructure, Mutation,
    PsStructure, XPow, ZinStructure,
};
use crate::exact_linear::{
    bilinear_extend, coeff_int, coeff_text, free_generator_series, lc_tensor, matrix_rank,
    parse_coeff, Basis, IntSeries, LinComb, Tagged2, Tensor2,
};
use crate::permutohedron::{
    ctd_compose, ctd_compose_mutated, degree0_projection, is_reduced, perm_to_sc0, pi_compose,
    ps_star, ps_star_basis, sc0_to_perm, sc_action, sc_coproduct, sc_coproduct_by_generators,
    set_comps, wf_product, wf_product_basis, wf_product_basis_mutated, wg_product,
    wg_product_basis, zin_compose, zin_coproduct, zin_product, zin_product_basis, SetComposition,
    TriGenerator,
};
use crate::symmetric_combinatorics::{
    alpha, as_compose, com_hat_product, concat_product, direct_sum, is_connected,
    mr_bar_coproduct, mr_hat_coproduct, mr_product, perms, word_concat, word_deconcat,
    word_shuffle, word_unshuffle, words_over, Perm, Word,
};

/// Highest degree reachable without `--unsafe-degree`.
const DEGREE_CAP: usize = 8;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Front-end failures; all of them exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("UnknownStructure: {0}")]
    UnknownStructure(String),
    #[error("DomainMismatch: {0}")]
    DomainMismatch(String),
    #[error("{0}")]
    Usage(String),
}

// ---------------------------------------------------------------------------
// Element parsers
// ---------------------------------------------------------------------------

/// Parse `[3,1,2]` or `[]`.
pub fn parse_perm(input: &str) -> Result<Perm, CliError> {
    let s = input.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| CliError::Parse(format!("expected a permutation like `[3,1,2]`, got `{input}`")))?;
    let mut word = Vec::new();
    if !inner.trim().is_empty() {
        for tok in inner.split(',') {
            let v: u8 = tok
                .trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("bad entry `{}` in `{input}`", tok.trim())))?;
            word.push(v);
        }
    }
    Perm::new(word).map_err(|e| CliError::Parse(format!("{e} in `{input}`")))
}

/// Parse `{3,4}|{1}`, `{}`, or the compact digit form `(34,1,56,2)`
/// (one digit per label, so labels 1–9 only).
pub fn parse_set_comp(input: &str) -> Result<SetComposition, CliError> {
    let s = input.trim();
    if s == "{}" {
        return Ok(SetComposition::empty());
    }
    let blocks: Vec<Vec<u8>> = if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .chars()
                    .map(|ch| {
                        ch.to_digit(10)
                            .map(|d| d as u8)
                            .ok_or_else(|| CliError::Parse(format!("bad digit `{ch}` in `{input}`")))
                    })
                    .collect::<Result<Vec<u8>, CliError>>()
            })
            .collect::<Result<Vec<_>, CliError>>()?
    } else {
        s.split('|')
            .map(|btok| {
                let inner = btok
                    .trim()
                    .strip_prefix('{')
                    .and_then(|r| r.strip_suffix('}'))
                    .ok_or_else(|| {
                        CliError::Parse(format!("expected a block like `{{3,4}}` in `{input}`"))
                    })?;
                inner
                    .split(',')
                    .map(|tok| {
                        tok.trim().parse::<u8>().map_err(|_| {
                            CliError::Parse(format!("bad entry `{}` in `{input}`", tok.trim()))
                        })
                    })
                    .collect::<Result<Vec<u8>, CliError>>()
            })
            .collect::<Result<Vec<_>, CliError>>()?
    };
    SetComposition::new(blocks).map_err(|e| CliError::Parse(format!("{e} in `{input}`")))
}

/// Parse `(| (| |))` / `|`; whitespace is ignored.
pub fn parse_tree(input: &str) -> Result<PlanarTree, CliError> {
    let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0usize;
    let t = parse_tree_at(&chars, &mut pos, input)?;
    if pos != chars.len() {
        return Err(CliError::Parse(format!("trailing input after tree in `{input}`")));
    }
    Ok(t)
}

fn parse_tree_at(chars: &[char], pos: &mut usize, input: &str) -> Result<PlanarTree, CliError> {
    match chars.get(*pos) {
        Some('|') => {
            *pos += 1;
            Ok(PlanarTree::Leaf)
        }
        Some('(') => {
            *pos += 1;
            let mut children = Vec::new();
            loop {
                match chars.get(*pos) {
                    Some(')') => {
                        *pos += 1;
                        break;
                    }
                    Some(_) => children.push(parse_tree_at(chars, pos, input)?),
                    None => return Err(CliError::Parse(format!("unbalanced `(` in `{input}`"))),
                }
            }
            PlanarTree::node(children).map_err(|e| CliError::Parse(format!("{e} in `{input}`")))
        }
        Some(c) => Err(CliError::Parse(format!("unexpected `{c}` in tree `{input}`"))),
        None => Err(CliError::Parse(format!("empty tree in `{input}`"))),
    }
}

/// Parse a lowercase ASCII word; `ε` or the empty string is the empty word.
pub fn parse_word(input: &str) -> Result<Word, CliError> {
    let s = input.trim();
    if s.is_empty() || s == "ε" {
        return Ok(Word::empty());
    }
    if s.chars().all(|c| c.is_ascii_lowercase()) {
        Ok(Word::new(s))
    } else {
        Err(CliError::Parse(format!(
            "expected a lowercase word like `ab`, got `{input}`"
        )))
    }
}

/// Parse `X^n`.
pub fn parse_xpow(input: &str) -> Result<XPow, CliError> {
    let s = input.trim();
    let body = s
        .strip_prefix("X^")
        .ok_or_else(|| CliError::Parse(format!("expected `X^n`, got `{input}`")))?;
    let n: usize = body
        .parse()
        .map_err(|_| CliError::Parse(format!("bad exponent `{body}` in `{input}`")))?;
    Ok(XPow(n))
}

/// Parse `0`, or ` + `-joined terms of the form `coeff*basis` / bare `basis`.
pub fn parse_lincomb<B: Basis>(
    input: &str,
    parse_basis: &dyn Fn(&str) -> Result<B, CliError>,
) -> Result<LinComb<B>, CliError> {
    let s = input.trim();
    if s == "0" {
        return Ok(LinComb::zero());
    }
    let mut out = LinComb::zero();
    for term in s.split(" + ") {
        let term = term.trim();
        if term.is_empty() {
            return Err(CliError::Parse(format!("empty term in `{input}`")));
        }
        if let Some(pos) = term.find('*') {
            if let Some(c) = parse_coeff(term[..pos].trim()) {
                out.add_term(parse_basis(term[pos + 1..].trim())?, c);
                continue;
            }
        }
        out.add_term(parse_basis(term)?, coeff_int(1));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Output rendering
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
struct TermLine<'a> {
    coeff: String,
    basis: &'a str,
}

fn json_term(coeff: String, basis: &str) -> String {
    serde_json::to_string(&TermLine { coeff, basis }).expect("term serializes")
}

/// Print a linear combination: its canonical text, or one JSON object per
/// term (canonical order, nothing at all for zero).
fn emit_lc<B: Basis>(lc: &LinComb<B>, json: bool) {
    if json {
        for (b, c) in lc.sorted_terms() {
            println!("{}", json_term(coeff_text(c), &b.text()));
        }
    } else {
        println!("{lc}");
    }
}

/// Print a single basis element (coefficient 1 in JSON mode).
fn emit_bare(text: &str, json: bool) {
    if json {
        println!("{}", json_term("1".to_string(), text));
    } else {
        println!("{text}");
    }
}

// ---------------------------------------------------------------------------
// Argument grammar
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "ohl",
    version,
    about = "Exact arithmetic and exhaustive law checking for operad-built combinatorial Hopf algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply two linear combinations in a named product structure.
    Mul {
        /// Structure name (mr-hat, mr-bar, ncqsym, chapoton-g, ctd, pi,
        /// ps-twisted, zin, td, dend, words, com).
        #[arg(long)]
        structure: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply the coproduct of a named coproduct structure.
    Comul {
        /// Structure name (mr-hatco, mr-barco, ncqsym, chapoton-g, ctd,
        /// ps-twisted, zin, td, dend, words).
        #[arg(long)]
        structure: String,
        #[arg(allow_hyphen_values = true)]
        arg: String,
        #[arg(long)]
        json: bool,
    },
    /// Operadic composition: full substitution (as, com) or a binary
    /// generator / sector insertion (ctd, pi, zin, td, dend).
    Compose {
        #[arg(long)]
        operad: String,
        /// Binary generator: prec, succ, or dot.
        #[arg(long = "gen")]
        generator: Option<String>,
        /// Sector index for sector insertion on trees.
        #[arg(long)]
        sector: Option<usize>,
        /// Outer element followed by the inner arguments.
        #[arg(required = true, allow_hyphen_values = true)]
        args: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a named map (alpha, phi, theta, phi0, psi, psi0, pi-td, pi-ctd).
    Map {
        #[arg(long)]
        name: String,
        arg: String,
        #[arg(long)]
        json: bool,
    },
    /// Basis sizes per degree for a combinatorial family
    /// (perms, setcomps, trees, bintrees).
    Dims {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Report a single degree instead of 0..=max-degree.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, hide = true)]
        unsafe_degree: bool,
        #[arg(long)]
        json: bool,
    },
    /// Primitive-space dimensions of a named coproduct in degrees 1..=max.
    Primitives {
        #[arg(long)]
        structure: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Report a single degree instead of 1..=max-degree.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, hide = true)]
        unsafe_degree: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run an exhaustive law suite; prints one PASS/FAIL line per law.
    Verify {
        /// Suite name (operad, mr, freeness, perm, duality, tree, maps,
        /// insertion, words, all).
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Worker threads; the output never depends on this.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Deliberately break one rule (drop-shuffle-K, drop-ctd-prec,
        /// drop-ctd-succ, drop-ctd-dot) to demonstrate detection.
        #[arg(long, hide = true)]
        mutate: Option<String>,
        #[arg(long, hide = true)]
        unsafe_degree: bool,
        #[arg(long)]
        json: bool,
    },
    /// Free-generator counts for a graded dimension series.
    Series {
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Comma-separated dimensions for degrees 1.. (overrides --family).
        #[arg(long, hide = true)]
        dims: Option<String>,
        #[arg(long, hide = true)]
        unsafe_degree: bool,
        #[arg(long)]
        json: bool,
    },
}

/// Parse argv, run, and return the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<i32, CliError> {
    match cmd {
        Cmd::Mul { structure, a, b, json } => {
            cmd_mul(&structure, &a, &b, json)?;
            Ok(0)
        }
        Cmd::Comul { structure, arg, json } => {
            cmd_comul(&structure, &arg, json)?;
            Ok(0)
        }
        Cmd::Compose { operad, generator, sector, args, json } => {
            cmd_compose(&operad, generator.as_deref(), sector, &args, json)?;
            Ok(0)
        }
        Cmd::Map { name, arg, json } => {
            cmd_map(&name, &arg, json)?;
            Ok(0)
        }
        Cmd::Dims { family, max_degree, degree, unsafe_degree, json } => {
            cmd_dims(&family, max_degree, degree, unsafe_degree, json)?;
            Ok(0)
        }
        Cmd::Primitives { structure, max_degree, degree, unsafe_degree, json } => {
            cmd_primitives(&structure, max_degree, degree, unsafe_degree, json)?;
            Ok(0)
        }
        Cmd::Verify { suite, max_degree, jobs, mutate, unsafe_degree, json } => {
            cmd_verify(&suite, max_degree, jobs, mutate.as_deref(), unsafe_degree, json)
        }
        Cmd::Series { family, max_degree, dims, unsafe_degree, json } => {
            cmd_series(family.as_deref(), max_degree, dims.as_deref(), unsafe_degree, json)?;
            Ok(0)
        }
    }
}

fn check_degree_cap(md: usize, unsafe_degree: bool) -> Result<(), CliError> {
    if md > DEGREE_CAP && !unsafe_degree {
        return Err(CliError::Usage(format!(
            "degree {md} exceeds the safety cap {DEGREE_CAP}; pass --unsafe-degree to override"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// mul / comul
// ---------------------------------------------------------------------------

fn cmd_mul(structure: &str, a: &str, b: &str, json: bool) -> Result<(), CliError> {
    match structure {
        "mr-hat" => {
            let x = parse_lincomb(a, &parse_perm)?;
            let y = parse_lincomb(b, &parse_perm)?;
            emit_lc(&mr_product(&x, &y), json);
        }
        "mr-bar" => {
            let x = parse_lincomb(a, &parse_perm)?;
            let y = parse_lincomb(b, &parse_perm)?;
            emit_lc(&concat_product(&x, &y), json);
        }
        "ncqsym" | "ctd" => {
            let x = parse_lincomb(a, &parse_set_comp)?;
            let y = parse_lincomb(b, &parse_set_comp)?;
            emit_lc(&wf_product(&x, &y), json);
        }
        "chapoton-g" | "pi" => {
            let x = parse_lincomb(a, &parse_set_comp)?;
            let y = parse_lincomb(b, &parse_set_comp)?;
            emit_lc(&wg_product(&x, &y), json);
        }
        "ps-twisted" => {
            let x = parse_lincomb(a, &parse_set_comp)?;
            let y = parse_lincomb(b, &parse_set_comp)?;
            emit_lc(&ps_star(&x, &y), json);
        }
        "zin" => {
            let x = parse_lincomb(a, &parse_perm)?;
            let y = parse_lincomb(b, &parse_perm)?;
            emit_lc(&zin_product(&x, &y), json);
        }
        "td" => {
            let x = parse_lincomb(a, &parse_tree)?;
            let y = parse_lincomb(b, &parse_tree)?;
            emit_lc(&bilinear_extend(td_star_basis, &x, &y), json);
        }
        "dend" => {
            let x = parse_lincomb(a, &parse_tree)?;
            let y = parse_lincomb(b, &parse_tree)?;
            require_binary_lc(&x)?;
            require_binary_lc(&y)?;
            emit_lc(&dend_star(&x, &y), json);
        }
        "words" => {
            let x = parse_lincomb(a, &parse_word)?;
            let y = parse_lincomb(b, &parse_word)?;
            emit_lc(&bilinear_extend(word_shuffle, &x, &y), json);
        }
        "com" => {
            let x = parse_lincomb(a, &parse_xpow)?;
            let y = parse_lincomb(b, &parse_xpow)?;
            let prod = bilinear_extend(
                |u: &XPow, v: &XPow| {
                    let (c, d) = com_hat_product(u.0, v.0);
                    LinComb::term(XPow(d), c)
                },
                &x,
                &y,
            );
            emit_lc(&prod, json);
        }
        "mr-hatco" | "mr-barco" => {
            return Err(CliError::Usage(format!(
                "structure `{structure}` is coproduct-only; use `comul`"
            )));
        }
        other => return Err(CliError::UnknownStructure(other.to_string())),
    }
    Ok(())
}

fn require_binary_lc(lc: &LinComb<PlanarTree>) -> Result<(), CliError> {
    for (t, _) in lc.iter() {
        if !t.is_binary() {
            return Err(CliError::DomainMismatch(format!(
                "`{}` is not a binary tree (dend structures live on binary trees)",
                t.text()
            )));
        }
    }
    Ok(())
}

fn cmd_comul(structure: &str, arg: &str, json: bool) -> Result<(), CliError> {
    match structure {
        "mr-hatco" => {
            let x = parse_lincomb(arg, &parse_perm)?;
            emit_lc(&x.bind(|s| mr_hat_coproduct(s)), json);
        }
        "mr-barco" => {
            let x = parse_lincomb(arg, &parse_perm)?;
            emit_lc(&x.bind(|s| mr_bar_coproduct(s)), json);
        }
        "ncqsym" | "chapoton-g" => {
            let x = parse_lincomb(arg, &parse_set_comp)?;
            emit_lc(&x.bind(|p| hat_coproduct(&CtdStructure, p)), json);
        }
        "ctd" => {
            let x = parse_lincomb(arg, &parse_set_comp)?;
            emit_lc(&x.bind(|p| sc_coproduct(p)), json);
        }
        "ps-twisted" => {
            let x = parse_lincomb(arg, &parse_set_comp)?;
            emit_lc(&x.bind(|p| crate::permutohedron::ps_coproduct(p)), json);
        }
        "zin" => {
            let x = parse_lincomb(arg, &parse_perm)?;
            emit_lc(&x.bind(|s| zin_coproduct(s)), json);
        }
        "td" => {
            let x = parse_lincomb(arg, &parse_tree)?;
            emit_lc(&x.bind(|t| tree_coproduct(t)), json);
        }
        "dend" => {
            let x = parse_lincomb(arg, &parse_tree)?;
            require_binary_lc(&x)?;
            emit_lc(&x.bind(|t| dend_coproduct(t).expect("binary checked above")), json);
        }
        "words" => {
            let x = parse_lincomb(arg, &parse_word)?;
            emit_lc(&x.bind(|w| word_deconcat(w)), json);
        }
        "mr-hat" | "mr-bar" | "pi" | "com" => {
            return Err(CliError::Usage(format!(
                "structure `{structure}` is product-only; use `mul`"
            )));
        }
        other => return Err(CliError::UnknownStructure(other.to_string())),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// compose
// ---------------------------------------------------------------------------

fn parse_generator(s: &str) -> Result<TriGenerator, CliError> {
    match s {
        "prec" => Ok(TriGenerator::Prec),
        "succ" => Ok(TriGenerator::Succ),
        "dot" => Ok(TriGenerator::Dot),
        other => Err(CliError::Usage(format!(
            "unknown generator `{other}` (expected prec, succ, or dot)"
        ))),
    }
}

fn cmd_compose(
    operad: &str,
    generator: Option<&str>,
    sector: Option<usize>,
    args: &[String],
    json: bool,
) -> Result<(), CliError> {
    let want_binary = |args: &[String]| -> Result<(), CliError> {
        if args.len() != 2 {
            Err(CliError::Usage(format!(
                "operad `{operad}` composes exactly two elements, got {}",
                args.len()
            )))
        } else {
            Ok(())
        }
    };
    match operad {
        "as" => {
            if generator.is_some() || sector.is_some() {
                return Err(CliError::Usage(
                    "--gen/--sector do not apply to the full substitution operads".into(),
                ));
            }
            let outer = parse_perm(&args[0])?;
            let inner: Vec<Perm> =
                args[1..].iter().map(|s| parse_perm(s)).collect::<Result<_, _>>()?;
            if inner.len() != outer.degree() {
                return Err(CliError::Usage(format!(
                    "outer permutation of size {} needs {} inner arguments, got {}",
                    outer.degree(),
                    outer.degree(),
                    inner.len()
                )));
            }
            let out = as_compose(&outer, &inner).map_err(|e| CliError::Usage(e.to_string()))?;
            emit_bare(&out.text(), json);
        }
        "com" => {
            if generator.is_some() || sector.is_some() {
                return Err(CliError::Usage(
                    "--gen/--sector do not apply to the full substitution operads".into(),
                ));
            }
            let outer = parse_xpow(&args[0])?;
            let inner: Vec<XPow> =
                args[1..].iter().map(|s| parse_xpow(s)).collect::<Result<_, _>>()?;
            if inner.len() != outer.0 {
                return Err(CliError::Usage(format!(
                    "outer X^{} needs {} inner arguments, got {}",
                    outer.0,
                    outer.0,
                    inner.len()
                )));
            }
            let total: usize = inner.iter().map(|x| x.0).sum();
            emit_bare(&XPow(total).text(), json);
        }
        "ctd" | "pi" => {
            want_binary(args)?;
            let g = parse_generator(generator.ok_or_else(|| {
                CliError::Usage(format!("operad `{operad}` needs --gen prec|succ|dot"))
            })?)?;
            if sector.is_some() {
                return Err(CliError::Usage("--sector only applies to the td operad".into()));
            }
            let p = parse_set_comp(&args[0])?;
            let q = parse_set_comp(&args[1])?;
            let out = if operad == "ctd" { ctd_compose(g, &p, &q) } else { pi_compose(g, &p, &q) };
            emit_lc(&out, json);
        }
        "zin" => {
            want_binary(args)?;
            let g = parse_generator(generator.ok_or_else(|| {
                CliError::Usage("operad `zin` needs --gen prec|succ".to_string())
            })?)?;
            if sector.is_some() {
                return Err(CliError::Usage("--sector only applies to the td operad".into()));
            }
            let s = parse_perm(&args[0])?;
            let t = parse_perm(&args[1])?;
            let out = zin_compose(g, &s, &t).map_err(|e| CliError::DomainMismatch(e.to_string()))?;
            emit_lc(&out, json);
        }
        "td" => {
            want_binary(args)?;
            let x = parse_tree(&args[0])?;
            let y = parse_tree(&args[1])?;
            match (generator, sector) {
                (Some(gs), None) => {
                    let g = parse_generator(gs)?;
                    emit_lc(&td_compose(g, &x, &y), json);
                }
                (None, Some(i)) => {
                    let out =
                        sector_insert(&x, i, &y).map_err(|e| CliError::DomainMismatch(e.to_string()))?;
                    emit_lc(&out, json);
                }
                _ => {
                    return Err(CliError::Usage(
                        "operad `td` needs exactly one of --gen or --sector".into(),
                    ))
                }
            }
        }
        "dend" => {
            want_binary(args)?;
            let g = parse_generator(generator.ok_or_else(|| {
                CliError::Usage("operad `dend` needs --gen prec|succ".to_string())
            })?)?;
            if sector.is_some() {
                return Err(CliError::Usage("--sector only applies to the td operad".into()));
            }
            let x = parse_tree(&args[0])?;
            let y = parse_tree(&args[1])?;
            let out = dend_compose(g, &x, &y).map_err(|e| match e {
                AssociahedronError::BadGenerator { .. } => CliError::Usage(e.to_string()),
                other => CliError::DomainMismatch(other.to_string()),
            })?;
            emit_lc(&out, json);
        }
        other => return Err(CliError::UnknownStructure(other.to_string())),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// map
// ---------------------------------------------------------------------------

fn cmd_map(name: &str, arg: &str, json: bool) -> Result<(), CliError> {
    match name {
        "alpha" => {
            let s = parse_perm(arg)?;
            emit_bare(&alpha(&s).text(), json);
        }
        "phi" | "theta" => {
            let p = parse_set_comp(arg)?;
            if !p.is_standard() {
                return Err(CliError::DomainMismatch(format!(
                    "`{}` is not standard (labels must be exactly 1..=n)",
                    p.text()
                )));
            }
            let t = if name == "phi" { phi(&p) } else { theta(&p) };
            emit_bare(&t.text(), json);
        }
        "phi0" => {
            let s = parse_perm(arg)?;
            emit_bare(&phi0(&s).text(), json);
        }
        "psi" => {
            let t = parse_tree(arg)?;
            emit_lc(&psi(&t), json);
        }
        "psi0" => {
            let t = parse_tree(arg)?;
            let out = psi0(&t).map_err(|e| CliError::DomainMismatch(e.to_string()))?;
            emit_lc(&out, json);
        }
        "pi-td" => {
            let t = parse_tree(arg)?;
            emit_lc(&dend_projection(&t), json);
        }
        "pi-ctd" => {
            let p = parse_set_comp(arg)?;
            emit_lc(&degree0_projection(&p), json);
        }
        other => return Err(CliError::UnknownStructure(other.to_string())),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// dims / primitives / series
// ---------------------------------------------------------------------------

fn family_count(family: &str, n: usize) -> Result<i64, CliError> {
    let c = match family {
        "perms" => perms(n).len(),
        "setcomps" => set_comps(n).len(),
        "trees" => trees(n).len(),
        "bintrees" => binary_trees(n).len(),
        other => return Err(CliError::UnknownStructure(other.to_string())),
    };
    Ok(c as i64)
}

#[derive(serde::Serialize)]
struct DimLine {
    degree: usize,
    count: i64,
}

fn cmd_dims(
    family: &str,
    max_degree: usize,
    degree: Option<usize>,
    unsafe_degree: bool,
    json: bool,
) -> Result<(), CliError> {
    let degrees: Vec<usize> = match degree {
        Some(d) => {
            check_degree_cap(d, unsafe_degree)?;
            vec![d]
        }
        None => {
            check_degree_cap(max_degree, unsafe_degree)?;
            (0..=max_degree).collect()
        }
    };
    let counts: Vec<i64> =
        degrees.iter().map(|&n| family_count(family, n)).collect::<Result<_, _>>()?;
    if json {
        for (&n, &c) in degrees.iter().zip(&counts) {
            let line = serde_json::to_string(&DimLine { degree: n, count: c })
                .expect("dims line serializes");
            println!("{line}");
        }
    } else {
        println!("{}", IntSeries::new(counts));
    }
    Ok(())
}

#[derive(serde::Serialize)]
struct PrimLine {
    degree: usize,
    dim: i64,
}

fn prim_dims_named(structure: &str, md: usize) -> Result<Vec<i64>, CliError> {
    let dims = match structure {
        "mr-hatco" => primitive_dims(&perm_basis, &mr_hat_coproduct, &Perm::empty(), md),
        "mr-barco" => primitive_dims(&perm_basis, &mr_bar_coproduct, &Perm::empty(), md),
        "ncqsym" | "ctd" | "chapoton-g" => {
            primitive_dims(&sc_basis, &sc_bar_cop, &SetComposition::empty(), md)
        }
        "ps-twisted" => primitive_dims(&sc_basis, &ps_bar_cop, &SetComposition::empty(), md),
        "zin" => primitive_dims(&perm_basis, &zin_bar_cop, &Perm::empty(), md),
        "td" => primitive_dims(&tree_basis, &tree_bar_coproduct, &PlanarTree::Leaf, md),
        "words" => primitive_dims(&word_basis, &word_deconcat, &Word::empty(), md),
        "mr-hat" | "mr-bar" | "pi" | "com" | "dend" => {
            return Err(CliError::Usage(format!(
                "structure `{structure}` has no registered coproduct for primitives"
            )));
        }
        other => return Err(CliError::UnknownStructure(other.to_string())),
    };
    Ok(dims)
}

fn cmd_primitives(
    structure: &str,
    max_degree: usize,
    degree: Option<usize>,
    unsafe_degree: bool,
    json: bool,
) -> Result<(), CliError> {
    let md = degree.unwrap_or(max_degree);
    check_degree_cap(md, unsafe_degree)?;
    if md == 0 {
        return Err(CliError::Usage("primitives live in degrees 1 and up".into()));
    }
    let dims = prim_dims_named(structure, md)?;
    let selected: Vec<(usize, i64)> = match degree {
        Some(d) => vec![(d, dims[d - 1])],
        None => dims.iter().enumerate().map(|(i, &v)| (i + 1, v)).collect(),
    };
    if json {
        for (d, v) in selected {
            let line = serde_json::to_string(&PrimLine { degree: d, dim: v })
                .expect("primitives line serializes");
            println!("{line}");
        }
    } else {
        println!("{}", IntSeries::new(selected.into_iter().map(|(_, v)| v).collect()));
    }
    Ok(())
}

#[derive(serde::Serialize)]
struct SeriesLine {
    series: &'static str,
    values: Vec<i64>,
}

fn cmd_series(
    family: Option<&str>,
    max_degree: usize,
    dims_override: Option<&str>,
    unsafe_degree: bool,
    json: bool,
) -> Result<(), CliError> {
    let dims: Vec<i64> = match (dims_override, family) {
        (Some(raw), _) => raw
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::Parse(format!("bad dimension `{}`", tok.trim())))
            })
            .collect::<Result<_, _>>()?,
        (None, Some(fam)) => {
            check_degree_cap(max_degree, unsafe_degree)?;
            (1..=max_degree).map(|n| family_count(fam, n)).collect::<Result<_, _>>()?
        }
        (None, None) => {
            return Err(CliError::Usage("series needs --family or --dims".into()));
        }
    };
    let f = IntSeries::new(dims);
    let g = free_generator_series(&f).map_err(|e| CliError::DomainMismatch(e.to_string()))?;
    if json {
        let dims_line = serde_json::to_string(&SeriesLine { series: "dims", values: f.dims.clone() })
            .expect("series line serializes");
        let gen_line =
            serde_json::to_string(&SeriesLine { series: "generators", values: g.dims.clone() })
                .expect("series line serializes");
        println!("{dims_line}");
        println!("{gen_line}");
    } else {
        println!("dims: {f}");
        println!("generators: {g}");
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// verify: task plumbing
// ---------------------------------------------------------------------------

/// One law check, boxed so suites can be scheduled across worker threads.
pub struct CheckTask {
    run: Box<dyn FnOnce() -> CheckReport + Send>,
}

fn task(run: impl FnOnce() -> CheckReport + Send + 'static) -> CheckTask {
    CheckTask { run: Box::new(run) }
}

fn parse_mutation(s: Option<&str>) -> Result<Mutation, CliError> {
    let Some(s) = s else { return Ok(Mutation::None) };
    if let Some(k) = s.strip_prefix("drop-shuffle-") {
        let k: usize = k
            .parse()
            .map_err(|_| CliError::Usage(format!("bad shuffle index in mutation `{s}`")))?;
        return Ok(Mutation::DropShuffleTerm(k));
    }
    match s {
        "drop-ctd-prec" => Ok(Mutation::DropCtdBranch(TriGenerator::Prec)),
        "drop-ctd-succ" => Ok(Mutation::DropCtdBranch(TriGenerator::Succ)),
        "drop-ctd-dot" => Ok(Mutation::DropCtdBranch(TriGenerator::Dot)),
        other => Err(CliError::Usage(format!("unknown mutation `{other}`"))),
    }
}

/// Run every task and return reports in task order. `OHL_SEED` (if set to an
/// integer) shuffles only the execution order; results are merged back by
/// index, so output is identical for any seed and any `jobs`.
pub fn run_reports(tasks: Vec<CheckTask>, jobs: usize) -> Vec<CheckReport> {
    let n = tasks.len();
    let mut order: Vec<usize> = (0..n).collect();
    if let Ok(seed) = std::env::var("OHL_SEED") {
        if let Ok(seed) = seed.trim().parse::<u64>() {
            order.shuffle(&mut StdRng::seed_from_u64(seed));
        }
    }
    let mut pool: Vec<Option<CheckTask>> = tasks.into_iter().map(Some).collect();
    let queue: Mutex<VecDeque<(usize, CheckTask)>> = Mutex::new(
        order
            .into_iter()
            .map(|i| (i, pool[i].take().expect("each task scheduled once")))
            .collect(),
    );
    let slots: Vec<Mutex<Option<CheckReport>>> = (0..n).map(|_| Mutex::new(None)).collect();
    let work = || loop {
        let next = queue.lock().expect("queue lock").pop_front();
        match next {
            Some((i, t)) => {
                let report = (t.run)();
                *slots[i].lock().expect("slot lock") = Some(report);
            }
            None => break,
        }
    };
    if jobs <= 1 {
        work();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(work);
            }
        });
    }
    slots
        .into_iter()
        .map(|m| m.into_inner().expect("slot lock").expect("every task ran"))
        .collect()
}

/// Build and run a suite single-threaded (the in-process entry point used by
/// the test suites).
pub fn suite_reports(
    suite: &str,
    max_degree: usize,
    mutation: Mutation,
) -> Result<Vec<CheckReport>, CliError> {
    Ok(run_reports(suite_tasks(suite, max_degree, mutation)?, 1))
}

fn cmd_verify(
    suite: &str,
    max_degree: usize,
    jobs: usize,
    mutate: Option<&str>,
    unsafe_degree: bool,
    json: bool,
) -> Result<i32, CliError> {
    check_degree_cap(max_degree, unsafe_degree)?;
    if jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let mutation = parse_mutation(mutate)?;
    let tasks = suite_tasks(suite, max_degree, mutation)?;
    let reports = run_reports(tasks, jobs);
    let mut all_pass = true;
    for r in &reports {
        println!("{}", if json { r.json_line() } else { r.text_line() });
        all_pass &= r.passed();
    }
    Ok(if all_pass { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// verify: shared helpers
// ---------------------------------------------------------------------------

fn perm_basis(n: usize) -> Vec<Perm> {
    perms(n)
}
fn sc_basis(n: usize) -> Vec<SetComposition> {
    set_comps(n)
}
fn word_basis(n: usize) -> Vec<Word> {
    words_over(b"ab", n)
}
fn bin_basis(n: usize) -> Vec<PlanarTree> {
    binary_trees(n)
}

fn sc_bar_cop(p: &SetComposition) -> LinComb<Tensor2<SetComposition, SetComposition>> {
    bar_coproduct(&CtdStructure, p)
}
fn sc_hat_cop(p: &SetComposition) -> LinComb<Tensor2<SetComposition, SetComposition>> {
    hat_coproduct(&CtdStructure, p)
}
fn ps_bar_cop(p: &SetComposition) -> LinComb<Tensor2<SetComposition, SetComposition>> {
    bar_coproduct(&PsStructure, p)
}
fn ps_hat_cop(p: &SetComposition) -> LinComb<Tensor2<SetComposition, SetComposition>> {
    hat_coproduct(&PsStructure, p)
}
fn zin_bar_cop(s: &Perm) -> LinComb<Tensor2<Perm, Perm>> {
    bar_coproduct(&ZinStructure, s)
}
fn zin_hat_cop(s: &Perm) -> LinComb<Tensor2<Perm, Perm>> {
    hat_coproduct(&ZinStructure, s)
}

fn shuffle_skip(mutation: Mutation) -> Option<usize> {
    match mutation {
        Mutation::DropShuffleTerm(k) => Some(k),
        _ => None,
    }
}
fn ctd_drop(mutation: Mutation) -> Option<TriGenerator> {
    match mutation {
        Mutation::DropCtdBranch(g) => Some(g),
        _ => None,
    }
}

/// The symmetrized shuffle product on permutations, with an optional dropped
/// shuffle term.
fn mr_hat_prod(mutation: Mutation) -> impl Fn(&Perm, &Perm) -> LinComb<Perm> {
    hat_of_with(
        |x: &Perm, y: &Perm| LinComb::single(direct_sum(x, y)),
        |b: &Perm, s: &Perm| b.mul(s),
        |b: &Perm| b.degree(),
        shuffle_skip(mutation),
    )
}

/// Symmetrize a raw product on set compositions over face-map shuffles.
fn sc_hat<M>(raw: M) -> impl Fn(&SetComposition, &SetComposition) -> LinComb<SetComposition>
where
    M: Fn(&SetComposition, &SetComposition) -> LinComb<SetComposition>,
{
    hat_of_with(
        raw,
        |p: &SetComposition, s: &Perm| sc_action(p, s).expect("shuffle degrees match"),
        |p: &SetComposition| p.letter_count(),
        None,
    )
}

/// Symmetrize a raw product on permutations under the twisted (inverse-left)
/// action.
fn zin_hat<M>(raw: M) -> impl Fn(&Perm, &Perm) -> LinComb<Perm>
where
    M: Fn(&Perm, &Perm) -> LinComb<Perm>,
{
    hat_of_with(
        raw,
        |b: &Perm, s: &Perm| s.inv().mul(b),
        |b: &Perm| b.degree(),
        None,
    )
}

/// Quasi-shuffle product with an optional dropped rule branch.
fn wf_raw(drop: Option<TriGenerator>) -> impl Fn(&SetComposition, &SetComposition) -> LinComb<SetComposition> {
    move |p, q| match drop {
        Some(g) => wf_product_basis_mutated(p, q, g),
        None => wf_product_basis(p, q),
    }
}

/// One generator of the face composition, with an optional dropped branch.
fn ctd_gen(
    g: TriGenerator,
    drop: Option<TriGenerator>,
) -> impl Fn(&SetComposition, &SetComposition) -> LinComb<SetComposition> {
    move |p, q| match drop {
        Some(d) => ctd_compose_mutated(g, p, q, d),
        None => ctd_compose(g, p, q),
    }
}

fn lc2<B: Basis>(op: &dyn Fn(&B, &B) -> LinComb<B>, a: &LinComb<B>, b: &LinComb<B>) -> LinComb<B> {
    bilinear_extend(|x: &B, y: &B| op(x, y), a, b)
}

fn report_pass(suite: &str, axiom: &str, degrees: String, header: Option<String>) -> CheckReport {
    CheckReport {
        suite: suite.to_string(),
        axiom: axiom.to_string(),
        degrees,
        status: CheckStatus::Pass,
        witness: None,
        header,
    }
}

fn report_fail(
    suite: &str,
    axiom: &str,
    degrees: String,
    header: Option<String>,
    witness: CheckWitness,
) -> CheckReport {
    CheckReport {
        suite: suite.to_string(),
        axiom: axiom.to_string(),
        degrees,
        status: CheckStatus::Fail,
        witness: Some(witness),
        header,
    }
}

/// Two binary operations agree on all basis pairs with
/// `min_total <= d1+d2 <= max_degree`.
#[allow(clippy::too_many_arguments)]
fn check_pairs<B: Basis>(
    suite: &str,
    axiom: &str,
    header: Option<String>,
    basis: &dyn Fn(usize) -> Vec<B>,
    f: &dyn Fn(&B, &B) -> LinComb<B>,
    g: &dyn Fn(&B, &B) -> LinComb<B>,
    min_total: usize,
    max_degree: usize,
) -> CheckReport {
    let degrees = if min_total > 0 {
        format!("{min_total} <= deg <= {max_degree}")
    } else {
        format!("deg <= {max_degree}")
    };
    for d1 in 0..=max_degree {
        for d2 in 0..=max_degree - d1 {
            if d1 + d2 < min_total {
                continue;
            }
            for x in basis(d1) {
                for y in basis(d2) {
                    let lhs = f(&x, &y);
                    let rhs = g(&x, &y);
                    if lhs != rhs {
                        return report_fail(
                            suite,
                            axiom,
                            degrees,
                            header,
                            CheckWitness {
                                inputs: vec![x.text(), y.text()],
                                lhs: lhs.to_string(),
                                rhs: rhs.to_string(),
                            },
                        );
                    }
                }
            }
        }
    }
    report_pass(suite, axiom, degrees, header)
}

/// Two three-argument expressions agree on all basis triples with total
/// degree ≤ `max_degree`; each argument ranges over degrees ≥ `min_each`
/// (generator relations quantify over operad elements, which are nonempty).
#[allow(clippy::too_many_arguments)]
fn check_triple<B: Basis>(
    suite: &str,
    axiom: &str,
    header: Option<String>,
    basis: &dyn Fn(usize) -> Vec<B>,
    lhs: &dyn Fn(&B, &B, &B) -> LinComb<B>,
    rhs: &dyn Fn(&B, &B, &B) -> LinComb<B>,
    min_each: usize,
    max_degree: usize,
) -> CheckReport {
    let degrees = if min_each > 0 {
        format!("{min_each} <= deg <= {max_degree}")
    } else {
        format!("deg <= {max_degree}")
    };
    for d1 in min_each..=max_degree {
        for d2 in min_each..=max_degree - d1 {
            for d3 in min_each..=max_degree - d1 - d2 {
                for x in basis(d1) {
                    for y in basis(d2) {
                        for z in basis(d3) {
                            let l = lhs(&x, &y, &z);
                            let r = rhs(&x, &y, &z);
                            if l != r {
                                return report_fail(
                                    suite,
                                    axiom,
                                    degrees,
                                    header,
                                    CheckWitness {
                                        inputs: vec![x.text(), y.text(), z.text()],
                                        lhs: l.to_string(),
                                        rhs: r.to_string(),
                                    },
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    report_pass(suite, axiom, degrees, header)
}

fn expect_dims(got: Vec<i64>, want: &[i64]) -> Result<(), CheckWitness> {
    if got == want {
        Ok(())
    } else {
        Err(CheckWitness {
            inputs: vec![],
            lhs: IntSeries::new(got).to_string(),
            rhs: IntSeries::new(want.to_vec()).to_string(),
        })
    }
}

fn generator_series_matches(dims: &[i64], want: &[i64]) -> Result<(), CheckWitness> {
    match free_generator_series(&IntSeries::new(dims.to_vec())) {
        Ok(g) => expect_dims(g.dims, want),
        Err(e) => Err(CheckWitness {
            inputs: vec![IntSeries::new(dims.to_vec()).to_string()],
            lhs: e.to_string(),
            rhs: "a nonnegative generator series".to_string(),
        }),
    }
}

/// Partial substitution `s ∘_i t`: identity permutations in every other slot.
fn partial_as(s: &Perm, i: usize, t: &Perm) -> Perm {
    let fillers: Vec<Perm> = (1..=s.degree())
        .map(|j| if j == i { t.clone() } else { Perm::identity(1) })
        .collect();
    as_compose(s, &fillers).expect("filler count matches the outer size")
}

// ---------------------------------------------------------------------------
// verify: suites
// ---------------------------------------------------------------------------

fn operad_suite(md: usize) -> Vec<CheckTask> {
    let mut tasks = Vec::new();

    tasks.push(task(move || {
        check_custom("operad", "as-worked-example", "fixed example", None, || {
            let sigma = Perm::new(vec![3, 2, 1, 4]).expect("valid permutation");
            let taus = [
                Perm::new(vec![2, 1]).expect("valid permutation"),
                Perm::new(vec![1, 3, 2]).expect("valid permutation"),
                Perm::new(vec![1]).expect("valid permutation"),
                Perm::new(vec![2, 3, 1]).expect("valid permutation"),
            ];
            let got = as_compose(&sigma, &taus).expect("matching arity");
            let want = Perm::new(vec![6, 5, 2, 4, 3, 1, 8, 9, 7]).expect("valid permutation");
            if got == want {
                Ok(())
            } else {
                Err(CheckWitness {
                    inputs: vec![sigma.text()],
                    lhs: got.text(),
                    rhs: want.text(),
                })
            }
        })
    }));

    tasks.push(task(move || {
        check_custom("operad", "as-unit", &format!("deg <= {md}"), None, || {
            let id1 = Perm::identity(1);
            for n in 1..=md {
                for s in perms(n) {
                    for i in 1..=n {
                        let got = partial_as(&s, i, &id1);
                        if got != s {
                            return Err(CheckWitness {
                                inputs: vec![s.text(), format!("i={i}")],
                                lhs: got.text(),
                                rhs: s.text(),
                            });
                        }
                    }
                    let got = partial_as(&id1, 1, &s);
                    if got != s {
                        return Err(CheckWitness {
                            inputs: vec![s.text()],
                            lhs: got.text(),
                            rhs: s.text(),
                        });
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        check_custom("operad", "as-nested-assoc", &format!("deg <= {md}"), None, || {
            for a in 1..=md {
                for b in 1..=md.saturating_sub(a) {
                    for c in 1..=md.saturating_sub(a + b) {
                        for x in perms(a) {
                            for y in perms(b) {
                                for z in perms(c) {
                                    for i in 1..=a {
                                        for j in 1..=b {
                                            let lhs =
                                                partial_as(&partial_as(&x, i, &y), i + j - 1, &z);
                                            let rhs = partial_as(&x, i, &partial_as(&y, j, &z));
                                            if lhs != rhs {
                                                return Err(CheckWitness {
                                                    inputs: vec![
                                                        x.text(),
                                                        y.text(),
                                                        z.text(),
                                                        format!("i={i}, j={j}"),
                                                    ],
                                                    lhs: lhs.text(),
                                                    rhs: rhs.text(),
                                                });
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        check_custom("operad", "as-parallel-assoc", &format!("deg <= {md}"), None, || {
            for a in 2..=md {
                for b in 1..=md.saturating_sub(a) {
                    for c in 1..=md.saturating_sub(a + b) {
                        for x in perms(a) {
                            for y in perms(b) {
                                for z in perms(c) {
                                    for i in 1..=a {
                                        for k in (i + 1)..=a {
                                            let lhs =
                                                partial_as(&partial_as(&x, i, &y), k + b - 1, &z);
                                            let rhs = partial_as(&partial_as(&x, k, &z), i, &y);
                                            if lhs != rhs {
                                                return Err(CheckWitness {
                                                    inputs: vec![
                                                        x.text(),
                                                        y.text(),
                                                        z.text(),
                                                        format!("i={i}, k={k}"),
                                                    ],
                                                    lhs: lhs.text(),
                                                    rhs: rhs.text(),
                                                });
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        check_custom(
            "operad",
            "com-binomial",
            "n+m <= 10",
            Some("independent Pascal-triangle oracle".to_string()),
            || {
                let mut pascal: Vec<Vec<i64>> = vec![vec![1]];
                for r in 1..=10usize {
                    let prev = &pascal[r - 1];
                    let mut row = vec![1i64];
                    for c in 1..r {
                        row.push(prev[c - 1] + prev[c]);
                    }
                    row.push(1);
                    pascal.push(row);
                }
                for n in 0..=10usize {
                    for m in 0..=(10 - n) {
                        let (c, d) = com_hat_product(n, m);
                        let want = coeff_int(pascal[n + m][n]);
                        if c != want || d != n + m {
                            return Err(CheckWitness {
                                inputs: vec![format!("X^{n}"), format!("X^{m}")],
                                lhs: format!("{} * X^{}", coeff_text(&c), d),
                                rhs: format!("{} * X^{}", pascal[n + m][n], n + m),
                            });
                        }
                    }
                }
                Ok(())
            },
        )
    }));

    tasks.push(task(move || {
        check_custom("operad", "ctd-filtration", &format!("deg <= {md}"), None, || {
            for g in [TriGenerator::Prec, TriGenerator::Succ, TriGenerator::Dot] {
                for a in 1..=md.saturating_sub(1) {
                    for b in 1..=(md - a) {
                        for p in set_comps(a) {
                            for q in set_comps(b) {
                                let out = ctd_compose(g, &p, &q);
                                let base = p.face_degree()
                                    + q.face_degree()
                                    + usize::from(g == TriGenerator::Dot);
                                for (r, _) in out.iter() {
                                    if r.face_degree() < base {
                                        return Err(CheckWitness {
                                            inputs: vec![g.name().to_string(), p.text(), q.text()],
                                            lhs: r.text(),
                                            rhs: format!("face degree >= {base}"),
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        check_custom("operad", "pi-graded", &format!("deg <= {md}"), None, || {
            for g in [TriGenerator::Prec, TriGenerator::Succ, TriGenerator::Dot] {
                for a in 1..=md.saturating_sub(1) {
                    for b in 1..=(md - a) {
                        for p in set_comps(a) {
                            for q in set_comps(b) {
                                let out = pi_compose(g, &p, &q);
                                let base = p.face_degree()
                                    + q.face_degree()
                                    + usize::from(g == TriGenerator::Dot);
                                for (r, _) in out.iter() {
                                    if r.face_degree() != base {
                                        return Err(CheckWitness {
                                            inputs: vec![g.name().to_string(), p.text(), q.text()],
                                            lhs: r.text(),
                                            rhs: format!("face degree == {base}"),
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        let prec = |x: &Perm, y: &Perm| zin_compose(TriGenerator::Prec, x, y).expect("prec is total");
        let lhs = |x: &Perm, y: &Perm, z: &Perm| lc2(&prec, &prec(x, y), &LinComb::single(z.clone()));
        let rhs =
            |x: &Perm, y: &Perm, z: &Perm| lc2(&prec, &LinComb::single(x.clone()), &zin_product_basis(y, z));
        check_triple(
            "operad",
            "zin-zinbiel",
            Some("(x<y)<z = x<(y*z)".to_string()),
            &perm_basis,
            &lhs,
            &rhs,
            0,
            md,
        )
    }));

    tasks.push(task(move || {
        let prec = |x: &Perm, y: &Perm| zin_compose(TriGenerator::Prec, x, y).expect("prec is total");
        let succ = |x: &Perm, y: &Perm| zin_compose(TriGenerator::Succ, x, y).expect("succ is total");
        let lhs = |x: &Perm, y: &Perm, z: &Perm| lc2(&prec, &succ(x, y), &LinComb::single(z.clone()));
        let rhs = |x: &Perm, y: &Perm, z: &Perm| lc2(&succ, &LinComb::single(x.clone()), &prec(y, z));
        check_triple(
            "operad",
            "zin-mixed",
            Some("(x>y)<z = x>(y<z)".to_string()),
            &perm_basis,
            &lhs,
            &rhs,
            0,
            md,
        )
    }));

    tasks.push(task(move || {
        let succ = |x: &Perm, y: &Perm| zin_compose(TriGenerator::Succ, x, y).expect("succ is total");
        let lhs = |x: &Perm, y: &Perm, z: &Perm| lc2(&succ, &zin_product_basis(x, y), &LinComb::single(z.clone()));
        let rhs = |x: &Perm, y: &Perm, z: &Perm| lc2(&succ, &LinComb::single(x.clone()), &succ(y, z));
        check_triple(
            "operad",
            "zin-succ",
            Some("(x*y)>z = x>(y>z)".to_string()),
            &perm_basis,
            &lhs,
            &rhs,
            0,
            md,
        )
    }));

    tasks.push(task(move || {
        let halves = |x: &Perm, y: &Perm| {
            zin_compose(TriGenerator::Prec, x, y)
                .expect("prec is total")
                .add(&zin_compose(TriGenerator::Succ, x, y).expect("succ is total"))
        };
        let full = |x: &Perm, y: &Perm| zin_product_basis(x, y);
        check_pairs(
            "operad",
            "zin-halves-sum",
            Some("x<y + x>y = x*y away from the empty pair".to_string()),
            &perm_basis,
            &halves,
            &full,
            1,
            md,
        )
    }));

    tasks.push(task(move || {
        let hat_prec = zin_hat(|x: &Perm, y: &Perm| {
            zin_compose(TriGenerator::Prec, x, y).expect("prec is total")
        });
        let hat_succ = zin_hat(|x: &Perm, y: &Perm| {
            zin_compose(TriGenerator::Succ, x, y).expect("succ is total")
        });
        let opposite = |x: &Perm, y: &Perm| hat_succ(y, x);
        check_pairs(
            "operad",
            "zin-hat-opposite",
            Some("symmetrized x<y equals symmetrized y>x".to_string()),
            &perm_basis,
            &hat_prec,
            &opposite,
            0,
            md,
        )
    }));

    tasks
}

fn mr_suite(md: usize, mutation: Mutation) -> Vec<CheckTask> {
    let concat = |x: &Perm, y: &Perm| LinComb::single(direct_sum(x, y));
    vec![
        task(move || {
            let prod = mr_hat_prod(mutation);
            check_associative("mr", "hat-assoc", &perm_basis, &prod, md)
        }),
        task(move || {
            let prod = mr_hat_prod(mutation);
            check_unit("mr", "hat-unit", &perm_basis, &prod, &Perm::empty(), md)
        }),
        task(move || check_coassociative("mr", "barco-coassoc", &perm_basis, &mr_bar_coproduct, md)),
        task(move || {
            check_counit("mr", "barco-counit", &perm_basis, &mr_bar_coproduct, &Perm::empty(), md)
        }),
        task(move || {
            let prod = mr_hat_prod(mutation);
            check_hopf_compat("mr", "hat-barco-hopf", &perm_basis, &prod, &mr_bar_coproduct, md)
        }),
        task(move || check_associative("mr", "bar-assoc", &perm_basis, &concat, md)),
        task(move || check_unit("mr", "bar-unit", &perm_basis, &concat, &Perm::empty(), md)),
        task(move || check_coassociative("mr", "hatco-coassoc", &perm_basis, &mr_hat_coproduct, md)),
        task(move || {
            check_counit("mr", "hatco-counit", &perm_basis, &mr_hat_coproduct, &Perm::empty(), md)
        }),
        task(move || {
            check_cocommutative("mr", "hatco-cocommutative", &perm_basis, &mr_hat_coproduct, md)
        }),
        task(move || {
            check_hopf_compat("mr", "bar-hatco-hopf", &perm_basis, &concat, &mr_hat_coproduct, md)
        }),
        task(move || {
            check_unital_infinitesimal(
                "mr",
                "bar-barco-ui",
                &perm_basis,
                &concat,
                &mr_bar_coproduct,
                &Perm::empty(),
                md,
            )
        }),
    ]
}

fn freeness_suite() -> Vec<CheckTask> {
    vec![
        task(|| {
            check_custom("freeness", "mr-primitive-dims", "n <= 5", None, || {
                let dims = primitive_dims(&perm_basis, &mr_bar_coproduct, &Perm::empty(), 5);
                expect_dims(dims, &[1, 1, 3, 13, 71])
            })
        }),
        task(|| {
            check_custom("freeness", "mr-connected-counts", "n <= 5", None, || {
                let counts: Vec<i64> = (1..=5)
                    .map(|n| perms(n).iter().filter(|s| is_connected(s)).count() as i64)
                    .collect();
                expect_dims(counts, &[1, 1, 3, 13, 71])
            })
        }),
        task(|| {
            check_custom("freeness", "mr-generator-series", "n <= 5", None, || {
                generator_series_matches(&[1, 2, 6, 24, 120], &[1, 1, 3, 13, 71])
            })
        }),
        task(|| {
            check_custom("freeness", "sc-primitive-dims", "n <= 4", None, || {
                let dims = primitive_dims(&sc_basis, &sc_bar_cop, &SetComposition::empty(), 4);
                expect_dims(dims, &[1, 2, 8, 48])
            })
        }),
        task(|| {
            check_custom("freeness", "sc-reduced-counts", "n <= 4", None, || {
                let counts: Vec<i64> = (1..=4)
                    .map(|n| set_comps(n).iter().filter(|p| is_reduced(p)).count() as i64)
                    .collect();
                expect_dims(counts, &[1, 2, 8, 48])
            })
        }),
        task(|| {
            check_custom("freeness", "sc-generator-series", "n <= 4", None, || {
                generator_series_matches(&[1, 3, 13, 75], &[1, 2, 8, 48])
            })
        }),
        task(|| {
            check_custom("freeness", "tree-primitive-dims", "n <= 4", None, || {
                let dims = primitive_dims(&tree_basis, &tree_bar_coproduct, &PlanarTree::Leaf, 4);
                expect_dims(dims, &[1, 2, 6, 22])
            })
        }),
        task(|| {
            check_custom("freeness", "tree-flag-counts", "n <= 4", None, || {
                let counts: Vec<i64> = (1..=4)
                    .map(|n| {
                        trees(n)
                            .iter()
                            .filter(|t| {
                                !t.is_leaf()
                                    && t.children().last().map(|c| c.is_leaf()).unwrap_or(false)
                            })
                            .count() as i64
                    })
                    .collect();
                expect_dims(counts, &[1, 2, 6, 22])
            })
        }),
        task(|| {
            check_custom("freeness", "tree-generator-series", "n <= 4", None, || {
                generator_series_matches(&[1, 3, 11, 45], &[1, 2, 6, 22])
            })
        }),
    ]
}

fn perm_suite(md: usize, mutation: Mutation) -> Vec<CheckTask> {
    let mut tasks = Vec::new();

    tasks.push(task(move || {
        check_map_equality(
            "perm",
            "cop-closed-vs-recursion",
            &sc_basis,
            &sc_coproduct,
            &sc_coproduct_by_generators,
            md,
        )
    }));

    tasks.push(task(move || {
        let drop = ctd_drop(mutation);
        let prec = sc_hat(ctd_gen(TriGenerator::Prec, drop));
        let dot = sc_hat(ctd_gen(TriGenerator::Dot, drop));
        let lhs = |x: &SetComposition, y: &SetComposition, z: &SetComposition| {
            lc2(&prec, &prec(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &SetComposition, y: &SetComposition, z: &SetComposition| {
            let inner = prec(y, z).add(&prec(z, y)).add(&dot(y, z));
            lc2(&prec, &LinComb::single(x.clone()), &inner)
        };
        check_triple(
            "perm",
            "rel-prec-prec",
            Some("(x<y)<z = x<(y<z + z<y + y.z)".to_string()),
            &sc_basis,
            &lhs,
            &rhs,
            1,
            md,
        )
    }));

    tasks.push(task(move || {
        let drop = ctd_drop(mutation);
        let prec = sc_hat(ctd_gen(TriGenerator::Prec, drop));
        let dot = sc_hat(ctd_gen(TriGenerator::Dot, drop));
        let lhs = |x: &SetComposition, y: &SetComposition, z: &SetComposition| {
            lc2(&prec, &dot(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &SetComposition, y: &SetComposition, z: &SetComposition| {
            lc2(&dot, &LinComb::single(x.clone()), &prec(y, z))
        };
        check_triple(
            "perm",
            "rel-dot-prec",
            Some("(x.y)<z = x.(y<z)".to_string()),
            &sc_basis,
            &lhs,
            &rhs,
            1,
            md,
        )
    }));

    tasks.push(task(move || {
        let drop = ctd_drop(mutation);
        let dot = sc_hat(ctd_gen(TriGenerator::Dot, drop));
        let lhs = |x: &SetComposition, y: &SetComposition, z: &SetComposition| {
            lc2(&dot, &dot(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &SetComposition, y: &SetComposition, z: &SetComposition| {
            lc2(&dot, &LinComb::single(x.clone()), &dot(y, z))
        };
        check_triple(
            "perm",
            "rel-dot-dot",
            Some("(x.y).z = x.(y.z)".to_string()),
            &sc_basis,
            &lhs,
            &rhs,
            1,
            md,
        )
    }));

    tasks.push(task(move || {
        let drop = ctd_drop(mutation);
        let dot = sc_hat(ctd_gen(TriGenerator::Dot, drop));
        let flipped = |x: &SetComposition, y: &SetComposition| dot(y, x);
        check_pairs("perm", "dot-commutative", None, &sc_basis, &dot, &flipped, 0, md)
    }));

    tasks.push(task(move || {
        let drop = ctd_drop(mutation);
        let wf = sc_hat(wf_raw(drop));
        let flipped = |x: &SetComposition, y: &SetComposition| wf(y, x);
        check_pairs("perm", "hat-wf-commutative", None, &sc_basis, &wf, &flipped, 0, md)
    }));

    tasks.push(task(move || {
        let wfr = wf_raw(ctd_drop(mutation));
        check_associative("perm", "wf-assoc", &sc_basis, &wfr, md)
    }));

    tasks.push(task(move || {
        let wfr = wf_raw(ctd_drop(mutation));
        check_unit("perm", "wf-unit", &sc_basis, &wfr, &SetComposition::empty(), md)
    }));

    tasks.push(task(move || {
        check_coassociative("perm", "barco-coassoc", &sc_basis, &sc_bar_cop, md)
    }));
    tasks.push(task(move || {
        check_counit("perm", "barco-counit", &sc_basis, &sc_bar_cop, &SetComposition::empty(), md)
    }));

    tasks.push(task(move || {
        let wfr = wf_raw(ctd_drop(mutation));
        check_unital_infinitesimal(
            "perm",
            "wf-barco-ui",
            &sc_basis,
            &wfr,
            &sc_bar_cop,
            &SetComposition::empty(),
            md,
        )
    }));

    tasks.push(task(move || {
        let wfr = wf_raw(ctd_drop(mutation));
        check_hopf_compat("perm", "ncqsym-hopf", &sc_basis, &wfr, &sc_hat_cop, md)
    }));

    tasks.push(task(move || {
        let wgr = |x: &SetComposition, y: &SetComposition| wg_product_basis(x, y);
        check_hopf_compat("perm", "chapoton-hopf", &sc_basis, &wgr, &sc_hat_cop, md)
    }));

    tasks.push(task(move || {
        check_coassociative("perm", "hatco-coassoc", &sc_basis, &sc_hat_cop, md)
    }));
    tasks.push(task(move || {
        check_counit("perm", "hatco-counit", &sc_basis, &sc_hat_cop, &SetComposition::empty(), md)
    }));

    tasks.push(task(move || {
        let drop = ctd_drop(mutation);
        let wf = sc_hat(wf_raw(drop));
        check_hopf_compat("perm", "hatwf-barco-hopf", &sc_basis, &wf, &sc_bar_cop, md)
    }));

    tasks.push(task(move || {
        let star = sc_hat(ps_star_basis);
        check_associative("perm", "ps-star-assoc", &sc_basis, &star, md)
    }));
    tasks.push(task(move || {
        let star = sc_hat(ps_star_basis);
        check_unit("perm", "ps-star-unit", &sc_basis, &star, &SetComposition::empty(), md)
    }));
    tasks.push(task(move || {
        check_coassociative("perm", "ps-barco-coassoc", &sc_basis, &ps_bar_cop, md)
    }));
    tasks.push(task(move || {
        check_counit("perm", "ps-barco-counit", &sc_basis, &ps_bar_cop, &SetComposition::empty(), md)
    }));
    tasks.push(task(move || {
        check_coassociative("perm", "ps-hatco-coassoc", &sc_basis, &ps_hat_cop, md)
    }));
    tasks.push(task(move || {
        check_counit("perm", "ps-hatco-counit", &sc_basis, &ps_hat_cop, &SetComposition::empty(), md)
    }));
    tasks.push(task(move || {
        let star = sc_hat(ps_star_basis);
        check_hopf_compat("perm", "ps-hatstar-barco-hopf", &sc_basis, &star, &ps_bar_cop, md)
    }));
    tasks.push(task(move || {
        check_hopf_compat("perm", "ps-barstar-hatco-hopf", &sc_basis, &ps_star_basis, &ps_hat_cop, md)
    }));

    tasks.push(task(move || {
        let hat_mz = zin_hat(zin_product_basis);
        let flipped = |x: &Perm, y: &Perm| hat_mz(y, x);
        check_pairs("perm", "zin-hatmz-commutative", None, &perm_basis, &hat_mz, &flipped, 0, md)
    }));
    tasks.push(task(move || {
        let hat_mz = zin_hat(zin_product_basis);
        check_hopf_compat("perm", "zin-hatmz-barco-hopf", &perm_basis, &hat_mz, &zin_bar_cop, md)
    }));
    tasks.push(task(move || {
        check_hopf_compat(
            "perm",
            "zin-barmz-hatco-hopf",
            &perm_basis,
            &zin_product_basis,
            &zin_hat_cop,
            md,
        )
    }));
    tasks.push(task(move || {
        check_unital_infinitesimal(
            "perm",
            "zin-barmz-barco-ui",
            &perm_basis,
            &zin_product_basis,
            &zin_bar_cop,
            &Perm::empty(),
            md,
        )
    }));

    tasks.push(task(move || {
        check_map_equality(
            "perm",
            "zin-strip-vs-mr-barco",
            &perm_basis,
            &zin_hat_cop,
            &mr_bar_coproduct,
            md,
        )
    }));

    tasks.push(task(move || {
        let drop = ctd_drop(mutation);
        let hat_wf = sc_hat(wf_raw(drop));
        let hat_mz = zin_hat(zin_product_basis);
        let projected_product =
            |p: &SetComposition, q: &SetComposition| hat_wf(p, q).bind(|r| degree0_projection(r));
        let product_of_projections = |p: &SetComposition, q: &SetComposition| {
            lc2(&hat_mz, &degree0_projection(p), &degree0_projection(q))
        };
        check_product_equality(
            "perm",
            "zin-projection-algebra",
            &sc_basis,
            &projected_product,
            &product_of_projections,
            md,
        )
    }));

    tasks.push(task(move || {
        check_custom(
            "perm",
            "zin-projection-coproduct",
            &format!("deg <= {md}"),
            Some("tagged coproduct restricted to singleton-block compositions".to_string()),
            || {
                for n in 0..=md {
                    for s in perms(n) {
                        let p = perm_to_sc0(&s);
                        let lhs: LinComb<Tagged2<Perm>> = sc_coproduct(&p).bind(|t| {
                            let l = sc0_to_perm(&t.left).expect("split keeps singleton blocks");
                            let r = sc0_to_perm(&t.right).expect("split keeps singleton blocks");
                            LinComb::single(Tagged2::new(l, r, t.s.clone(), t.t.clone()))
                        });
                        let rhs = zin_coproduct(&s);
                        if lhs != rhs {
                            return Err(CheckWitness {
                                inputs: vec![s.text()],
                                lhs: lhs.to_string(),
                                rhs: rhs.to_string(),
                            });
                        }
                    }
                }
                Ok(())
            },
        )
    }));

    tasks
}

/// The pairings cross the two coproduct families: concatenation (star) is
/// adjoint to the block-prefix (deconcatenation) coproduct, while the
/// quasi-shuffle is adjoint to the restriction coproduct — at matching
/// symmetrization levels (hat with hat, bar with bar).
fn duality_suite(md: usize) -> Vec<CheckTask> {
    vec![
        task(move || {
            let star = sc_hat(ps_star_basis);
            check_transpose_duality("duality", "ps-hatstar-vs-hatdelta", &sc_basis, &star, &sc_hat_cop, md)
        }),
        task(move || {
            check_transpose_duality(
                "duality",
                "ps-barstar-vs-bardelta",
                &sc_basis,
                &ps_star_basis,
                &sc_bar_cop,
                md,
            )
        }),
        task(move || {
            let wf = sc_hat(wf_product_basis);
            check_transpose_duality("duality", "ctd-hatwf-vs-hatdelta", &sc_basis, &wf, &ps_hat_cop, md)
        }),
        task(move || {
            check_transpose_duality(
                "duality",
                "ctd-barwf-vs-bardelta",
                &sc_basis,
                &wf_product_basis,
                &ps_bar_cop,
                md,
            )
        }),
    ]
}

fn tree_suite(md: usize) -> Vec<CheckTask> {
    let tprec = |x: &PlanarTree, y: &PlanarTree| td_compose(TriGenerator::Prec, x, y);
    let tsucc = |x: &PlanarTree, y: &PlanarTree| td_compose(TriGenerator::Succ, x, y);
    let tdot = |x: &PlanarTree, y: &PlanarTree| td_compose(TriGenerator::Dot, x, y);
    let dprec =
        |x: &PlanarTree, y: &PlanarTree| dend_compose(TriGenerator::Prec, x, y).expect("binary basis");
    let dsucc =
        |x: &PlanarTree, y: &PlanarTree| dend_compose(TriGenerator::Succ, x, y).expect("binary basis");
    let mut tasks = Vec::new();

    tasks.push(task(move || {
        let lhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tprec, &tprec(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tprec, &LinComb::single(x.clone()), &td_star_basis(y, z))
        };
        check_triple("tree", "td-rel-1", Some("(x<y)<z = x<(y*z)".to_string()), &tree_basis, &lhs, &rhs, 0, md)
    }));
    tasks.push(task(move || {
        let lhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tprec, &tsucc(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tsucc, &LinComb::single(x.clone()), &tprec(y, z))
        };
        check_triple("tree", "td-rel-2", Some("(x>y)<z = x>(y<z)".to_string()), &tree_basis, &lhs, &rhs, 0, md)
    }));
    tasks.push(task(move || {
        let lhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tsucc, &td_star_basis(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tsucc, &LinComb::single(x.clone()), &tsucc(y, z))
        };
        check_triple("tree", "td-rel-3", Some("(x*y)>z = x>(y>z)".to_string()), &tree_basis, &lhs, &rhs, 0, md)
    }));
    tasks.push(task(move || {
        let lhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tdot, &tsucc(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tsucc, &LinComb::single(x.clone()), &tdot(y, z))
        };
        check_triple("tree", "td-rel-4", Some("(x>y).z = x>(y.z)".to_string()), &tree_basis, &lhs, &rhs, 0, md)
    }));
    tasks.push(task(move || {
        let lhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tdot, &tprec(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tdot, &LinComb::single(x.clone()), &tsucc(y, z))
        };
        check_triple("tree", "td-rel-5", Some("(x<y).z = x.(y>z)".to_string()), &tree_basis, &lhs, &rhs, 0, md)
    }));
    tasks.push(task(move || {
        let lhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tprec, &tdot(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tdot, &LinComb::single(x.clone()), &tprec(y, z))
        };
        check_triple("tree", "td-rel-6", Some("(x.y)<z = x.(y<z)".to_string()), &tree_basis, &lhs, &rhs, 0, md)
    }));
    tasks.push(task(move || {
        let lhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tdot, &tdot(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&tdot, &LinComb::single(x.clone()), &tdot(y, z))
        };
        check_triple("tree", "td-rel-7", Some("(x.y).z = x.(y.z)".to_string()), &tree_basis, &lhs, &rhs, 0, md)
    }));

    tasks.push(task(move || check_associative("tree", "star-assoc", &tree_basis, &td_star_basis, md)));
    tasks.push(task(move || {
        check_unit("tree", "star-unit", &tree_basis, &td_star_basis, &PlanarTree::Leaf, md)
    }));
    tasks.push(task(move || check_coassociative("tree", "copt-coassoc", &tree_basis, &tree_coproduct, md)));
    tasks.push(task(move || {
        check_counit("tree", "copt-counit", &tree_basis, &tree_coproduct, &PlanarTree::Leaf, md)
    }));
    tasks.push(task(move || {
        check_hopf_compat("tree", "star-copt-hopf", &tree_basis, &td_star_basis, &tree_coproduct, md)
    }));
    tasks.push(task(move || {
        check_coassociative("tree", "barcopt-coassoc", &tree_basis, &tree_bar_coproduct, md)
    }));
    tasks.push(task(move || {
        check_counit("tree", "barcopt-counit", &tree_basis, &tree_bar_coproduct, &PlanarTree::Leaf, md)
    }));
    tasks.push(task(move || {
        check_unital_infinitesimal(
            "tree",
            "star-barcopt-ui",
            &tree_basis,
            &td_star_basis,
            &tree_bar_coproduct,
            &PlanarTree::Leaf,
            md,
        )
    }));

    tasks.push(task(move || {
        let graft = |a: &PlanarTree, b: &PlanarTree| LinComb::single(backslash(a, b));
        check_associative("tree", "backslash-assoc", &tree_basis, &graft, md)
    }));
    tasks.push(task(move || {
        let graft = |a: &PlanarTree, b: &PlanarTree| LinComb::single(backslash(a, b));
        check_transpose_duality(
            "tree",
            "backslash-vs-barcopt-transpose",
            &tree_basis,
            &graft,
            &tree_bar_coproduct,
            md,
        )
    }));

    tasks.push(task(move || {
        let lhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&dprec, &dprec(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&dprec, &LinComb::single(x.clone()), &dend_star_basis(y, z))
        };
        check_triple("tree", "dend-rel-1", Some("(x<y)<z = x<(y*z)".to_string()), &bin_basis, &lhs, &rhs, 0, md)
    }));
    tasks.push(task(move || {
        let lhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&dprec, &dsucc(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&dsucc, &LinComb::single(x.clone()), &dprec(y, z))
        };
        check_triple("tree", "dend-rel-2", Some("(x>y)<z = x>(y<z)".to_string()), &bin_basis, &lhs, &rhs, 0, md)
    }));
    tasks.push(task(move || {
        let lhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&dsucc, &dend_star_basis(x, y), &LinComb::single(z.clone()))
        };
        let rhs = |x: &PlanarTree, y: &PlanarTree, z: &PlanarTree| {
            lc2(&dsucc, &LinComb::single(x.clone()), &dsucc(y, z))
        };
        check_triple("tree", "dend-rel-3", Some("(x*y)>z = x>(y>z)".to_string()), &bin_basis, &lhs, &rhs, 0, md)
    }));

    tasks.push(task(move || {
        check_associative("tree", "dend-star-assoc", &bin_basis, &dend_star_basis, md)
    }));
    tasks.push(task(move || {
        check_unit("tree", "dend-star-unit", &bin_basis, &dend_star_basis, &PlanarTree::Leaf, md)
    }));
    tasks.push(task(move || {
        let cop = |t: &PlanarTree| dend_coproduct(t).expect("binary basis");
        check_coassociative("tree", "dend-copt-coassoc", &bin_basis, &cop, md)
    }));
    tasks.push(task(move || {
        let cop = |t: &PlanarTree| dend_coproduct(t).expect("binary basis");
        check_counit("tree", "dend-copt-counit", &bin_basis, &cop, &PlanarTree::Leaf, md)
    }));
    tasks.push(task(move || {
        let cop = |t: &PlanarTree| dend_coproduct(t).expect("binary basis");
        check_hopf_compat("tree", "dend-star-copt-hopf", &bin_basis, &dend_star_basis, &cop, md)
    }));

    tasks.push(task(move || {
        let projected = |x: &PlanarTree, y: &PlanarTree| td_star_basis(x, y).bind(|t| dend_projection(t));
        check_product_equality(
            "tree",
            "dend-star-is-projected-star",
            &bin_basis,
            &dend_star_basis,
            &projected,
            md,
        )
    }));
    tasks.push(task(move || {
        let cop = |t: &PlanarTree| dend_coproduct(t).expect("binary basis");
        let projected = |t: &PlanarTree| {
            tree_coproduct(t)
                .bind(|pair| lc_tensor(&dend_projection(&pair.left), &dend_projection(&pair.right)))
        };
        check_map_equality("tree", "dend-copt-is-projected", &bin_basis, &cop, &projected, md)
    }));
    tasks.push(task(move || {
        let projected = |x: &PlanarTree, y: &PlanarTree| td_star_basis(x, y).bind(|t| dend_projection(t));
        let star_of_projections =
            |x: &PlanarTree, y: &PlanarTree| dend_star(&dend_projection(x), &dend_projection(y));
        check_product_equality(
            "tree",
            "projection-star-morphism",
            &tree_basis,
            &projected,
            &star_of_projections,
            md,
        )
    }));

    tasks
}

fn maps_suite(md: usize) -> Vec<CheckTask> {
    let mut tasks = Vec::new();

    tasks.push(task(move || {
        check_custom("maps", "phi-worked-example", "fixed example", None, || {
            let p = SetComposition::new(vec![vec![3, 4], vec![1], vec![5, 6], vec![2]])
                .expect("valid set composition");
            let leaf = PlanarTree::Leaf;
            let want = PlanarTree::node(vec![
                PlanarTree::node(vec![
                    leaf.clone(),
                    PlanarTree::node(vec![leaf.clone(), leaf.clone()]).expect("arity 2"),
                ])
                .expect("arity 2"),
                leaf.clone(),
                PlanarTree::node(vec![leaf.clone(), leaf.clone(), leaf.clone()]).expect("arity 3"),
            ])
            .expect("arity 3");
            let got = phi(&p);
            if got == want {
                Ok(())
            } else {
                Err(CheckWitness { inputs: vec![p.text()], lhs: got.text(), rhs: want.text() })
            }
        })
    }));

    tasks.push(task(move || {
        check_custom("maps", "theta-is-phi-reverse", &format!("deg <= {md}"), None, || {
            for n in 0..=md {
                for p in set_comps(n) {
                    let reversed: Vec<Vec<u8>> = p.blocks().iter().rev().cloned().collect();
                    let rev = SetComposition::new(reversed).expect("same blocks, valid");
                    let got = theta(&p);
                    let want = phi(&rev);
                    if got != want {
                        return Err(CheckWitness {
                            inputs: vec![p.text()],
                            lhs: got.text(),
                            rhs: want.text(),
                        });
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        check_custom("maps", "theta-surjective", "n <= 3", None, || {
            for n in 0..=3usize {
                let hit: BTreeSet<PlanarTree> = set_comps(n).iter().map(theta).collect();
                for t in trees(n) {
                    if !hit.contains(&t) {
                        return Err(CheckWitness {
                            inputs: vec![format!("n={n}")],
                            lhs: format!("{} never attained", t.text()),
                            rhs: "every tree in the image".to_string(),
                        });
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        check_custom("maps", "phi-fibers-partition", "n <= 3", None, || {
            for n in 0..=3usize {
                let comps = set_comps(n);
                let mut fiber_sizes: BTreeMap<PlanarTree, usize> = BTreeMap::new();
                for p in &comps {
                    *fiber_sizes.entry(phi(p)).or_insert(0) += 1;
                }
                let total: usize = fiber_sizes.values().sum();
                if total != comps.len() {
                    return Err(CheckWitness {
                        inputs: vec![format!("n={n}")],
                        lhs: format!("fibers cover {total}"),
                        rhs: format!("{} set compositions", comps.len()),
                    });
                }
                for t in trees(n) {
                    if !fiber_sizes.contains_key(&t) {
                        return Err(CheckWitness {
                            inputs: vec![format!("n={n}")],
                            lhs: format!("empty fiber over {}", t.text()),
                            rhs: "every fiber nonempty".to_string(),
                        });
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        check_custom("maps", "phi0-lands-binary", &format!("deg <= {md}"), None, || {
            for n in 0..=md {
                for s in perms(n) {
                    let t = phi0(&s);
                    if !t.is_binary() || t.degree() != n {
                        return Err(CheckWitness {
                            inputs: vec![s.text()],
                            lhs: t.text(),
                            rhs: format!("a binary tree of degree {n}"),
                        });
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        let image_of_star = |x: &PlanarTree, y: &PlanarTree| td_star_basis(x, y).bind(|t| psi(t));
        let star_of_images = |x: &PlanarTree, y: &PlanarTree| wf_product(&psi(x), &psi(y));
        check_product_equality("maps", "psi-star-morphism", &tree_basis, &image_of_star, &star_of_images, md)
    }));

    tasks.push(task(move || {
        let image_of_cop = |t: &PlanarTree| {
            tree_coproduct(t).bind(|pair| lc_tensor(&psi(&pair.left), &psi(&pair.right)))
        };
        let cop_of_image = |t: &PlanarTree| psi(t).bind(|p| sc_hat_cop(p));
        check_map_equality("maps", "psi-coproduct-morphism", &tree_basis, &image_of_cop, &cop_of_image, md)
    }));

    tasks.push(task(move || {
        let image_of_star = |x: &PlanarTree, y: &PlanarTree| {
            dend_star_basis(x, y).bind(|t| psi0(t).expect("binary term"))
        };
        let star_of_images = |x: &PlanarTree, y: &PlanarTree| {
            mr_product(&psi0(x).expect("binary basis"), &psi0(y).expect("binary basis"))
        };
        check_product_equality("maps", "psi0-star-morphism", &bin_basis, &image_of_star, &star_of_images, md)
    }));

    tasks.push(task(move || {
        let image_of_cop = |t: &PlanarTree| {
            dend_coproduct(t).expect("binary basis").bind(|pair| {
                lc_tensor(
                    &psi0(&pair.left).expect("binary factor"),
                    &psi0(&pair.right).expect("binary factor"),
                )
            })
        };
        let cop_of_image =
            |t: &PlanarTree| psi0(t).expect("binary basis").bind(|s| mr_bar_coproduct(s));
        check_map_equality("maps", "psi0-coproduct-morphism", &bin_basis, &image_of_cop, &cop_of_image, md)
    }));

    tasks.push(task(move || {
        check_custom("maps", "psi0-injective", &format!("deg <= {md}"), None, || {
            for n in 0..=md {
                let bins = binary_trees(n);
                let rows: Vec<LinComb<Perm>> =
                    bins.iter().map(|t| psi0(t).expect("binary basis")).collect();
                let rank = matrix_rank(&rows, &perms(n));
                if rank != bins.len() {
                    return Err(CheckWitness {
                        inputs: vec![format!("n={n}")],
                        lhs: format!("rank {rank}"),
                        rhs: format!("rank {}", bins.len()),
                    });
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        let through_comps = |t: &PlanarTree| psi(t).bind(|p| degree0_projection(p));
        let through_binaries =
            |t: &PlanarTree| dend_projection(t).bind(|b| psi0(b).expect("projection image is binary"));
        check_map_equality("maps", "projection-square", &tree_basis, &through_comps, &through_binaries, md)
    }));

    tasks.push(task(move || {
        check_custom("maps", "alpha-square-conjugation", &format!("deg <= {md}"), None, || {
            for n in 0..=md {
                let w0 = Perm::longest(n);
                for s in perms(n) {
                    let twice = alpha(&alpha(&s));
                    let conj = w0.mul(&s).mul(&w0);
                    if twice != conj {
                        return Err(CheckWitness {
                            inputs: vec![s.text()],
                            lhs: twice.text(),
                            rhs: conj.text(),
                        });
                    }
                    let four = alpha(&alpha(&twice));
                    if four != s {
                        return Err(CheckWitness {
                            inputs: vec![s.text()],
                            lhs: four.text(),
                            rhs: s.text(),
                        });
                    }
                }
            }
            Ok(())
        })
    }));

    tasks
}

fn insertion_suite(md: usize) -> Vec<CheckTask> {
    let mut tasks = Vec::new();

    tasks.push(task(move || {
        check_custom("insertion", "generator-agreement", "y <= 3", None, || {
            let unit = PlanarTree::y();
            for g in [TriGenerator::Prec, TriGenerator::Succ, TriGenerator::Dot] {
                let gt = generator_tree(g);
                for d in 1..=3usize {
                    for y in trees(d) {
                        let first = sector_insert(&gt, 1, &y).expect("sector 1 exists");
                        let want_first = td_compose(g, &y, &unit);
                        if first != want_first {
                            return Err(CheckWitness {
                                inputs: vec![g.name().to_string(), y.text(), "sector 1".to_string()],
                                lhs: first.to_string(),
                                rhs: want_first.to_string(),
                            });
                        }
                        let second = sector_insert(&gt, 2, &y).expect("sector 2 exists");
                        let want_second = td_compose(g, &unit, &y);
                        if second != want_second {
                            return Err(CheckWitness {
                                inputs: vec![g.name().to_string(), y.text(), "sector 2".to_string()],
                                lhs: second.to_string(),
                                rhs: want_second.to_string(),
                            });
                        }
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        check_custom("insertion", "worked-example", "fixed example", None, || {
            let leaf = PlanarTree::Leaf;
            let r2 = PlanarTree::node(vec![leaf.clone(), PlanarTree::y()]).expect("arity 2");
            let l2 = PlanarTree::node(vec![PlanarTree::y(), leaf.clone()]).expect("arity 2");
            let c3 = PlanarTree::corolla(3);
            let got = sector_insert(&r2, 1, &r2).expect("sector 1 exists");
            let mut want = LinComb::zero();
            for inner in [r2.clone(), c3, l2] {
                want.add_term(
                    PlanarTree::node(vec![leaf.clone(), inner]).expect("arity 2"),
                    coeff_int(1),
                );
            }
            if got.len() != 3 || got != want {
                return Err(CheckWitness {
                    inputs: vec![r2.text(), "sector 1".to_string()],
                    lhs: got.to_string(),
                    rhs: want.to_string(),
                });
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        check_custom("insertion", "insert-unit-right", &format!("deg <= {md}"), None, || {
            let unit = PlanarTree::y();
            for a in 1..=md {
                for x in trees(a) {
                    for i in 1..=a {
                        let got = sector_insert(&x, i, &unit).expect("sector in range");
                        if got != LinComb::single(x.clone()) {
                            return Err(CheckWitness {
                                inputs: vec![x.text(), format!("sector {i}")],
                                lhs: got.to_string(),
                                rhs: LinComb::single(x.clone()).to_string(),
                            });
                        }
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        check_custom("insertion", "insert-unit-left", &format!("deg <= {md}"), None, || {
            let unit = PlanarTree::y();
            for a in 1..=md {
                for x in trees(a) {
                    let got = sector_insert(&unit, 1, &x).expect("sector 1 exists");
                    if got != LinComb::single(x.clone()) {
                        return Err(CheckWitness {
                            inputs: vec![x.text()],
                            lhs: got.to_string(),
                            rhs: LinComb::single(x.clone()).to_string(),
                        });
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        check_custom("insertion", "insert-nested-assoc", &format!("deg <= {md}"), None, || {
            for a in 1..=md {
                for b in 1..=md.saturating_sub(a) {
                    for c in 1..=md.saturating_sub(a + b) {
                        for x in trees(a) {
                            for y in trees(b) {
                                for z in trees(c) {
                                    for i in 1..=a {
                                        let xy = sector_insert(&x, i, &y).expect("sector in range");
                                        for j in 1..=b {
                                            let lhs = xy.bind(|t| {
                                                sector_insert(t, i + j - 1, &z)
                                                    .expect("sector in range")
                                            });
                                            let rhs = sector_insert(&y, j, &z)
                                                .expect("sector in range")
                                                .bind(|t| {
                                                    sector_insert(&x, i, t).expect("sector in range")
                                                });
                                            if lhs != rhs {
                                                return Err(CheckWitness {
                                                    inputs: vec![
                                                        x.text(),
                                                        y.text(),
                                                        z.text(),
                                                        format!("i={i}, j={j}"),
                                                    ],
                                                    lhs: lhs.to_string(),
                                                    rhs: rhs.to_string(),
                                                });
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        })
    }));

    tasks.push(task(move || {
        check_custom("insertion", "insert-parallel-assoc", &format!("deg <= {md}"), None, || {
            for a in 2..=md {
                for b in 1..=md.saturating_sub(a) {
                    for c in 1..=md.saturating_sub(a + b) {
                        for x in trees(a) {
                            for y in trees(b) {
                                for z in trees(c) {
                                    for i in 1..=a {
                                        let xy = sector_insert(&x, i, &y).expect("sector in range");
                                        for k in (i + 1)..=a {
                                            let lhs = xy.bind(|t| {
                                                sector_insert(t, k + b - 1, &z)
                                                    .expect("sector in range")
                                            });
                                            let rhs = sector_insert(&x, k, &z)
                                                .expect("sector in range")
                                                .bind(|t| {
                                                    sector_insert(t, i, &y).expect("sector in range")
                                                });
                                            if lhs != rhs {
                                                return Err(CheckWitness {
                                                    inputs: vec![
                                                        x.text(),
                                                        y.text(),
                                                        z.text(),
                                                        format!("i={i}, k={k}"),
                                                    ],
                                                    lhs: lhs.to_string(),
                                                    rhs: rhs.to_string(),
                                                });
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        })
    }));

    tasks
}

fn words_suite(md: usize) -> Vec<CheckTask> {
    vec![
        task(move || check_associative("words", "shuffle-assoc", &word_basis, &word_shuffle, md)),
        task(move || check_unit("words", "shuffle-unit", &word_basis, &word_shuffle, &Word::empty(), md)),
        task(move || {
            let flipped = |a: &Word, b: &Word| word_shuffle(b, a);
            check_pairs("words", "shuffle-commutative", None, &word_basis, &word_shuffle, &flipped, 0, md)
        }),
        task(move || check_coassociative("words", "deconcat-coassoc", &word_basis, &word_deconcat, md)),
        task(move || {
            check_counit("words", "deconcat-counit", &word_basis, &word_deconcat, &Word::empty(), md)
        }),
        task(move || {
            check_hopf_compat("words", "shuffle-deconcat-hopf", &word_basis, &word_shuffle, &word_deconcat, md)
        }),
        task(move || {
            let inner = check_unital_infinitesimal(
                "words",
                "ui-probe",
                &word_basis,
                &word_shuffle,
                &word_deconcat,
                &Word::empty(),
                md,
            );
            let degrees = format!("deg <= {md}");
            let header =
                Some("passes when shuffle/deconcatenation violate the unital-infinitesimal law".to_string());
            if inner.passed() {
                report_fail(
                    "words",
                    "ui-violation-detected",
                    degrees,
                    header,
                    CheckWitness {
                        inputs: vec![],
                        lhs: "the unital-infinitesimal law held".to_string(),
                        rhs: "an expected violation".to_string(),
                    },
                )
            } else {
                report_pass("words", "ui-violation-detected", degrees, header)
            }
        }),
        task(move || {
            check_transpose_duality(
                "words",
                "shuffle-vs-unshuffle-transpose",
                &word_basis,
                &word_shuffle,
                &word_unshuffle,
                md,
            )
        }),
        task(move || {
            let concat = |a: &Word, b: &Word| LinComb::single(word_concat(a, b));
            check_transpose_duality(
                "words",
                "concat-vs-deconcat-transpose",
                &word_basis,
                &concat,
                &word_deconcat,
                md,
            )
        }),
    ]
}

/// All suites, in their fixed output order.
pub const SUITES: &[&str] =
    &["operad", "mr", "freeness", "perm", "duality", "tree", "maps", "insertion", "words"];

/// Build the tasks of one suite (or of `all`).
pub fn suite_tasks(
    suite: &str,
    max_degree: usize,
    mutation: Mutation,
) -> Result<Vec<CheckTask>, CliError> {
    let md = max_degree;
    match suite {
        "operad" => Ok(operad_suite(md)),
        "mr" => Ok(mr_suite(md, mutation)),
        "freeness" => Ok(freeness_suite()),
        "perm" => Ok(perm_suite(md, mutation)),
        "duality" => Ok(duality_suite(md)),
        "tree" => Ok(tree_suite(md)),
        "maps" => Ok(maps_suite(md)),
        "insertion" => Ok(insertion_suite(md)),
        "words" => Ok(words_suite(md)),
        "all" => {
            let mut tasks = Vec::new();
            for s in SUITES {
                tasks.extend(suite_tasks(s, md, mutation)?);
            }
            Ok(tasks)
        }
        other => Err(CliError::UnknownStructure(format!("unknown suite `{other}`"))),
    }
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
