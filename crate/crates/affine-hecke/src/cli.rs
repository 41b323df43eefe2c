//! Deterministic command-line front end.
//!
//! One verb per library operation. Output is JSON by default (keys sorted,
//! compact, byte-stable for identical requests) or `--output table` for a
//! plain-text rendering of the same data.
//!
//! Exit codes: `0` success, `2` validation error, `3` resource bound
//! exceeded (interval or KL length caps, semi-infinite comparisons that the
//! sampling window cannot settle). Selftest failures exit `1`. Errors are
//! reported on stdout as `{"error": {"code", "message", "location"}}`.
//!
//! Element syntax accepted by `--element`, `--x`, `--y`:
//!
//! - `e` — the identity;
//! - word syntax: `t[1,0]s1`, `s0s1s0`, `s2s1s3s2` (letters `sK` use the
//!   code convention: `s1..sN` finite, `s0` the affine reflection);
//! - JSON: `{"translation": [1,0], "finite_word": [1,2]}` with 1-based
//!   finite letters.
//!
//! Hecke inputs (`--a`, `--b`, `--input`) accept either an element (read as
//! a `T`-basis vector) or `{"terms": [{"element": .., "poly": [[exp, c],
//! ..]}]}`. Characters are passed as `--highest [a,b]` (highest coweight) or
//! `--char [{"coweight": [..], "mult": n}, ..]`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::affweyl::{self, AffineWord, IWElement, Simple};
use crate::antispherical::{self, ASElement, SignConvention};
use crate::dualrep::{self, WeightMultiset};
use crate::error::{Error, Result};
use crate::hecke::{self, HeckeElement};
use crate::kl::{self, KLTable};
use crate::ktheory::{self, GroupRingElement, IWClassVector};
use crate::laurent::LaurentPoly;
use crate::rootdata::{Coweight, RootDatum};

/// Verb table: `(verb, library operation it exposes)`. The pairing is
/// asserted unique and complete by the coverage test.
pub const VERBS: &[(&str, &str)] = &[
    ("length", "affweyl::length"),
    ("reduced-word", "affweyl::reduced_word"),
    ("bruhat-leq", "affweyl::bruhat_leq"),
    ("semi-infinite-leq", "affweyl::semi_infinite_leq"),
    ("interval", "affweyl::bruhat_interval_below"),
    ("min-coset-rep", "affweyl::min_coset_rep"),
    ("admissible-set", "affweyl::admissible_set"),
    ("hecke-mult", "hecke::multiply"),
    ("theta", "hecke::bernstein_theta"),
    ("central", "hecke::central_element"),
    ("is-central", "hecke::is_central"),
    ("kl-poly", "kl::kl_polynomial"),
    ("kl-basis", "kl::KLTable::basis_element"),
    ("as-project", "antispherical::project"),
    ("kernel-check", "antispherical::kernel_check"),
    ("char", "dualrep::irreducible_character"),
    ("weyl-dim", "dualrep::weyl_dimension"),
    ("tensor-char", "dualrep::tensor_character"),
    ("minuscule-decomp", "dualrep::minuscule_decomposition"),
    ("class-ic", "ktheory::class_ic"),
    ("class-central", "ktheory::class_central"),
    ("av-iw", "ktheory::av_iw"),
    ("selftest", "invariant suite"),
];

struct CliError {
    err: Error,
    location: String,
}

trait At<T> {
    fn at(self, location: &str) -> std::result::Result<T, CliError>;
}

impl<T> At<T> for Result<T> {
    fn at(self, location: &str) -> std::result::Result<T, CliError> {
        self.map_err(|err| CliError { err, location: location.to_string() })
    }
}

struct Outcome {
    json: Value,
    table: String,
}

struct Request {
    verb: String,
    flags: BTreeMap<String, String>,
    max_length: usize,
    cache_dir: Option<PathBuf>,
    table_output: bool,
}

/// Runs one command; returns the output document and the process exit code.
pub fn run(args: &[String]) -> (String, i32) {
    let request = match parse_args(args) {
        Ok(Some(r)) => r,
        Ok(None) => return (usage(), 0),
        Err(e) => return render_error(&e),
    };
    if request.verb == "selftest" {
        return run_selftest(&request);
    }
    match dispatch(&request) {
        Ok(out) => {
            if request.table_output {
                (out.table, 0)
            } else {
                (out.json.to_string(), 0)
            }
        }
        Err(e) => render_error(&e),
    }
}

fn render_error(e: &CliError) -> (String, i32) {
    let (code, exit) = error_code(&e.err);
    let doc = json!({
        "error": {
            "code": code,
            "message": e.err.to_string(),
            "location": e.location,
        }
    });
    (doc.to_string(), exit)
}

fn error_code(e: &Error) -> (&'static str, i32) {
    match e {
        Error::BoundExceeded { .. } => ("bound-exceeded", 3),
        Error::Undetermined(_) => ("undetermined", 3),
        Error::UnknownPreset(_) => ("unknown-preset", 2),
        Error::InvalidDatum(_) => ("invalid-datum", 2),
        Error::NotFiniteType { .. } => ("not-finite-type", 2),
        Error::PairingMismatch { .. } => ("pairing-mismatch", 2),
        Error::NonDominant(_) => ("non-dominant", 2),
        Error::Parse(_) => ("parse", 2),
        Error::Unsupported(_) => ("unsupported", 2),
        Error::Cache(_) => ("cache", 2),
        Error::Io(_) => ("io", 2),
    }
}

fn usage() -> String {
    let mut out = String::from(
        "affine-hecke — extended affine Weyl groups, affine Hecke algebras, \
         Kazhdan-Lusztig bases, dual-group characters, K-group classes\n\n\
         usage: affine-hecke <verb> --datum <preset|json> [flags]\n\n\
         global flags:\n  \
         --datum <name|{json}>   root datum (presets: A1/SL2, PGL2, A2, A3, C2, G2,\n                          \
         GL2..GL12, '<X>finite' aliases; or {\"cartan\": [[..]], ..})\n  \
         --max-length <n>        length cap for KL tables and interval scans (default 8)\n  \
         --cache-dir <dir>       KL table cache directory (env FLAGKIT_CACHE overrides)\n  \
         --output json|table     output format (default json)\n\nverbs:\n",
    );
    let briefs: &[(&str, &str)] = &[
        ("length", "--element E: Iwahori-Matsumoto length"),
        ("reduced-word", "--element E: normal form omega * s_{i1}..s_{ik}"),
        ("bruhat-leq", "--x E --y E: Bruhat order comparison"),
        ("semi-infinite-leq", "--x E --y E: semi-infinite order comparison"),
        ("interval", "--element E: all elements Bruhat-below E"),
        ("min-coset-rep", "--coweight [..]: minimal element of W_fin * t_nu"),
        ("admissible-set", "--coweight [..]: union of intervals below t_{x mu}"),
        ("hecke-mult", "--a H --b H: product in the T-basis"),
        ("theta", "--coweight [..]: Bernstein element theta_nu"),
        ("central", "--highest [..] | --char M: central element z_V"),
        ("is-central", "--input H: commutes with the whole algebra?"),
        ("kl-poly", "--x E --y E: Kazhdan-Lusztig polynomial P_{x,y}(q)"),
        ("kl-basis", "--element E [--basis plus|minus]: canonical basis element"),
        ("as-project", "--input H [--convention sign|trivial]: antispherical image"),
        ("kernel-check", "--element E [--convention ..]: canonical image zero?"),
        ("char", "--highest [..]: irreducible character weight multiplicities"),
        ("weyl-dim", "--highest [..]: dimension by the Weyl product formula"),
        ("tensor-char", "--a C --b C: product character (C: highest or multiset)"),
        ("minuscule-decomp", "--coweight [..]: minuscule factors on GL-type lattices"),
        ("class-ic", "--element E: signed KL specialization in Z[W]"),
        ("class-central", "--highest [..] | --char M: central class in Z[W]"),
        ("av-iw", "--input G: averaging onto coset labels"),
        ("selftest", "[--datum X] [--max-length n]: invariant suite (A1, GL2, A2)"),
    ];
    for (verb, brief) in briefs {
        out.push_str(&format!("  {:<18} {}\n", verb, brief));
    }
    out.push_str("\nelements: 'e', 't[1,0]s1', 's0s1', or {\"translation\": [..], \"finite_word\": [..]}");
    out
}

fn parse_args(args: &[String]) -> std::result::Result<Option<Request>, CliError> {
    if args.is_empty() {
        return Err(CliError {
            err: Error::Parse("missing command; run 'affine-hecke help' for usage".into()),
            location: "command".into(),
        });
    }
    if matches!(args[0].as_str(), "help" | "--help" | "-h") {
        return Ok(None);
    }
    let verb = args[0].clone();
    if !VERBS.iter().any(|(v, _)| *v == verb) {
        return Err(CliError {
            err: Error::Parse(format!("unknown verb {:?}; run 'affine-hecke help' for the list", verb)),
            location: "command".into(),
        });
    }
    let mut flags = BTreeMap::new();
    let mut i = 1;
    while i < args.len() {
        let flag = &args[i];
        if !flag.starts_with("--") {
            return Err(CliError {
                err: Error::Parse(format!("expected a --flag, found {:?}", flag)),
                location: flag.clone(),
            });
        }
        let value = args.get(i + 1).ok_or_else(|| CliError {
            err: Error::Parse(format!("flag {} is missing its value", flag)),
            location: flag.clone(),
        })?;
        flags.insert(flag.clone(), value.clone());
        i += 2;
    }
    let max_length = match flags.get("--max-length") {
        Some(s) => s.parse::<usize>().map_err(|e| CliError {
            err: Error::Parse(format!("bad --max-length {:?}: {}", s, e)),
            location: "--max-length".into(),
        })?,
        None => kl::DEFAULT_MAX_LENGTH,
    };
    let cache_dir = std::env::var("FLAGKIT_CACHE")
        .ok()
        .filter(|s| !s.is_empty())
        .or_else(|| flags.get("--cache-dir").cloned())
        .map(PathBuf::from);
    let table_output = match flags.get("--output").map(String::as_str) {
        None | Some("json") => false,
        Some("table") => true,
        Some(other) => {
            return Err(CliError {
                err: Error::Parse(format!("bad --output {:?}: expected json or table", other)),
                location: "--output".into(),
            })
        }
    };
    Ok(Some(Request { verb, flags, max_length, cache_dir, table_output }))
}

fn required<'a>(r: &'a Request, flag: &str) -> std::result::Result<&'a str, CliError> {
    r.flags.get(flag).map(String::as_str).ok_or_else(|| CliError {
        err: Error::Parse(format!("verb {:?} requires {}", r.verb, flag)),
        location: flag.to_string(),
    })
}

fn load_datum(r: &Request) -> std::result::Result<RootDatum, CliError> {
    RootDatum::load(required(r, "--datum")?).at("--datum")
}

fn dispatch(r: &Request) -> std::result::Result<Outcome, CliError> {
    let d = load_datum(r)?;
    match r.verb.as_str() {
        "length" => {
            let x = element_arg(&d, r, "--element")?;
            let n = affweyl::length(&d, &x);
            Ok(Outcome { json: json!({ "length": n }), table: format!("length: {}", n) })
        }
        "reduced-word" => {
            let x = element_arg(&d, r, "--element")?;
            let w = affweyl::reduced_word(&d, &x);
            Ok(word_outcome(&d, &w))
        }
        "bruhat-leq" => {
            let x = element_arg(&d, r, "--x")?;
            let y = element_arg(&d, r, "--y")?;
            let leq = affweyl::bruhat_leq(&d, &x, &y);
            Ok(Outcome { json: json!({ "leq": leq }), table: format!("leq: {}", leq) })
        }
        "semi-infinite-leq" => {
            let x = element_arg(&d, r, "--x")?;
            let y = element_arg(&d, r, "--y")?;
            let leq = affweyl::semi_infinite_leq(&d, &x, &y).at(&r.verb)?;
            Ok(Outcome { json: json!({ "leq": leq }), table: format!("leq: {}", leq) })
        }
        "interval" => {
            let y = element_arg(&d, r, "--element")?;
            let set = affweyl::bruhat_interval_below(&d, &y, r.max_length).at(&r.verb)?;
            Ok(element_set_outcome(&d, set.iter()))
        }
        "min-coset-rep" => {
            let nu = coweight_arg(&d, r, "--coweight")?;
            let x = affweyl::min_coset_rep(&d, &nu);
            Ok(Outcome {
                json: json!({
                    "element": element_value(&d, &x),
                    "length": affweyl::length(&d, &x),
                }),
                table: format!(
                    "element: {}\nlength: {}",
                    affweyl::render_element(&d, &x),
                    affweyl::length(&d, &x)
                ),
            })
        }
        "admissible-set" => {
            let mu = coweight_arg(&d, r, "--coweight")?;
            let set = affweyl::admissible_set(&d, &mu, r.max_length).at(&r.verb)?;
            Ok(element_set_outcome(&d, set.iter()))
        }
        "hecke-mult" => {
            let a = hecke_arg(&d, r, "--a")?;
            let b = hecke_arg(&d, r, "--b")?;
            Ok(hecke_outcome(&d, &hecke::multiply(&d, &a, &b)))
        }
        "theta" => {
            let nu = coweight_arg(&d, r, "--coweight")?;
            Ok(hecke_outcome(&d, &hecke::bernstein_theta(&d, &nu)))
        }
        "central" => {
            let ch = character_arg(&d, r)?;
            let z = hecke::central_element(&d, &ch).at(&r.verb)?;
            Ok(hecke_outcome(&d, &z))
        }
        "is-central" => {
            let h = hecke_arg(&d, r, "--input")?;
            let c = hecke::is_central(&d, &h);
            Ok(Outcome { json: json!({ "central": c }), table: format!("central: {}", c) })
        }
        "kl-poly" => {
            let x = element_arg(&d, r, "--x")?;
            let y = element_arg(&d, r, "--y")?;
            let p = with_kl_table(&d, r, |table| kl::kl_polynomial(&d, table, &x, &y))?;
            let s = p.render_in_q();
            Ok(Outcome { json: json!({ "P": s }), table: format!("P = {}", s) })
        }
        "kl-basis" => {
            let w = element_arg(&d, r, "--element")?;
            let minus = match r.flags.get("--basis").map(String::as_str) {
                None | Some("plus") => false,
                Some("minus") => true,
                Some(other) => {
                    return Err(CliError {
                        err: Error::Parse(format!("bad --basis {:?}: expected plus or minus", other)),
                        location: "--basis".into(),
                    })
                }
            };
            let h = with_kl_table(&d, r, |table| {
                if minus {
                    table.minus_basis_element(&d, &w)
                } else {
                    table.basis_element(&d, &w).map(|a| (*a).clone())
                }
            })?;
            Ok(hecke_outcome(&d, &h))
        }
        "as-project" => {
            let h = hecke_arg(&d, r, "--input")?;
            let conv = convention_arg(r)?;
            let m = antispherical::project(&d, &h, conv);
            Ok(as_outcome(&m))
        }
        "kernel-check" => {
            let w = element_arg(&d, r, "--element")?;
            let conv = convention_arg(r)?;
            let b = with_kl_table(&d, r, |table| antispherical::kernel_check(&d, table, &w, conv))?;
            Ok(Outcome { json: json!({ "in_kernel": b }), table: format!("in_kernel: {}", b) })
        }
        "char" => {
            let mu = coweight_arg(&d, r, "--highest")?;
            let ch = dualrep::irreducible_character(&d, &mu).at(&r.verb)?;
            Ok(multiset_outcome(&ch))
        }
        "weyl-dim" => {
            let mu = coweight_arg(&d, r, "--highest")?;
            let dim = dualrep::weyl_dimension(&d, &mu).at(&r.verb)?;
            Ok(Outcome {
                json: json!({ "dimension": bigint_value(&dim) }),
                table: format!("dimension: {}", dim),
            })
        }
        "tensor-char" => {
            let a = multiset_arg(&d, r, "--a")?;
            let b = multiset_arg(&d, r, "--b")?;
            Ok(multiset_outcome(&dualrep::tensor_character(&a, &b)))
        }
        "minuscule-decomp" => {
            let mu = coweight_arg(&d, r, "--coweight")?;
            let factors = dualrep::minuscule_decomposition(&d, &mu).at(&r.verb)?;
            let json_factors: Vec<Value> =
                factors.iter().map(|nu| json!(nu.coords())).collect();
            let mut table = format!("factors: {}", factors.len());
            for nu in &factors {
                table.push_str(&format!("\n{}", nu));
            }
            Ok(Outcome { json: json!({ "factors": json_factors }), table })
        }
        "class-ic" => {
            let w = element_arg(&d, r, "--element")?;
            let g = with_kl_table(&d, r, |table| ktheory::class_ic(&d, table, &w))?;
            Ok(groupring_outcome(&d, &g))
        }
        "class-central" => {
            let ch = character_arg(&d, r)?;
            let g = ktheory::class_central(&d, &ch).at(&r.verb)?;
            Ok(groupring_outcome(&d, &g))
        }
        "av-iw" => {
            let g = groupring_arg(&d, r, "--input")?;
            let v = ktheory::av_iw(&d, &g);
            Ok(classvector_outcome(&v))
        }
        other => unreachable!("verb {other} validated in parse_args"),
    }
}

// ---- argument parsing ------------------------------------------------

fn element_arg(d: &RootDatum, r: &Request, flag: &str) -> std::result::Result<IWElement, CliError> {
    parse_element(d, required(r, flag)?).at(flag)
}

fn coweight_arg(d: &RootDatum, r: &Request, flag: &str) -> std::result::Result<Coweight, CliError> {
    parse_coweight(d, required(r, flag)?).at(flag)
}

fn hecke_arg(d: &RootDatum, r: &Request, flag: &str) -> std::result::Result<HeckeElement, CliError> {
    parse_hecke(d, required(r, flag)?).at(flag)
}

fn groupring_arg(
    d: &RootDatum,
    r: &Request,
    flag: &str,
) -> std::result::Result<GroupRingElement, CliError> {
    parse_groupring(d, required(r, flag)?).at(flag)
}

fn multiset_arg(
    d: &RootDatum,
    r: &Request,
    flag: &str,
) -> std::result::Result<WeightMultiset, CliError> {
    let s = required(r, flag)?;
    if let Ok(coords) = serde_json::from_str::<Vec<i64>>(s) {
        let mu = parse_coweight_coords(d, coords).at(flag)?;
        return dualrep::irreducible_character(d, &mu).at(flag);
    }
    parse_multiset(d, s).at(flag)
}

fn character_arg(d: &RootDatum, r: &Request) -> std::result::Result<WeightMultiset, CliError> {
    if let Some(s) = r.flags.get("--char") {
        return parse_multiset(d, s).at("--char");
    }
    if let Some(s) = r.flags.get("--highest") {
        let mu = parse_coweight(d, s).at("--highest")?;
        return dualrep::irreducible_character(d, &mu).at("--highest");
    }
    Err(CliError {
        err: Error::Parse(format!("verb {:?} requires --highest or --char", r.verb)),
        location: "--highest".into(),
    })
}

fn convention_arg(r: &Request) -> std::result::Result<SignConvention, CliError> {
    match r.flags.get("--convention").map(String::as_str) {
        None | Some("sign") => Ok(SignConvention::Sign),
        Some("trivial") => Ok(SignConvention::Trivial),
        Some(other) => Err(CliError {
            err: Error::Parse(format!("bad --convention {:?}: expected sign or trivial", other)),
            location: "--convention".into(),
        }),
    }
}

fn parse_coweight_coords(d: &RootDatum, coords: Vec<i64>) -> Result<Coweight> {
    if coords.len() != d.lattice_rank() {
        return Err(Error::Parse(format!(
            "coweight has {} coordinates, datum has lattice rank {}",
            coords.len(),
            d.lattice_rank()
        )));
    }
    Ok(Coweight(coords))
}

fn parse_coweight(d: &RootDatum, s: &str) -> Result<Coweight> {
    let coords: Vec<i64> = serde_json::from_str(s)
        .map_err(|e| Error::Parse(format!("bad coweight {:?}: {}", s, e)))?;
    parse_coweight_coords(d, coords)
}

fn parse_element(d: &RootDatum, s: &str) -> Result<IWElement> {
    let s = s.trim();
    if s.starts_with('{') {
        let v: Value = serde_json::from_str(s)
            .map_err(|e| Error::Parse(format!("bad element JSON: {}", e)))?;
        return element_from_json(d, &v);
    }
    parse_word_element(d, s)
}

fn element_from_json(d: &RootDatum, v: &Value) -> Result<IWElement> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("element JSON must be an object".into()))?;
    let translation = match obj.get("translation") {
        Some(t) => {
            let coords: Vec<i64> = serde_json::from_value(t.clone())
                .map_err(|e| Error::Parse(format!("bad translation: {}", e)))?;
            parse_coweight_coords(d, coords)?
        }
        None => Coweight::zero(d.lattice_rank()),
    };
    let mut fin = d.weyl().identity();
    if let Some(w) = obj.get("finite_word") {
        let letters: Vec<i64> = serde_json::from_value(w.clone())
            .map_err(|e| Error::Parse(format!("bad finite_word: {}", e)))?;
        for i in letters {
            if i < 1 || i as usize > d.rank() {
                return Err(Error::Parse(format!(
                    "finite_word letter {} out of range 1..={}",
                    i,
                    d.rank()
                )));
            }
            fin = d.weyl().mult(fin, d.weyl().simple(i as usize - 1));
        }
    }
    Ok(IWElement::new(translation, fin))
}

fn parse_word_element(d: &RootDatum, s: &str) -> Result<IWElement> {
    let mut x = IWElement::identity(d.lattice_rank());
    if s == "e" {
        return Ok(x);
    }
    if s.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    let mut rest = s;
    while !rest.is_empty() {
        if let Some(tail) = rest.strip_prefix("t[") {
            let close = tail
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unclosed 't[' in element {:?}", s)))?;
            let inside = &tail[..close];
            let coords: Vec<i64> = if inside.trim().is_empty() {
                Vec::new()
            } else {
                inside
                    .split(',')
                    .map(|t| {
                        t.trim().parse::<i64>().map_err(|e| {
                            Error::Parse(format!("bad translation coordinate {:?}: {}", t, e))
                        })
                    })
                    .collect::<Result<_>>()?
            };
            let nu = parse_coweight_coords(d, coords)?;
            x = affweyl::multiply(d, &x, &IWElement::translation_of(nu));
            rest = &tail[close + 1..];
        } else if let Some(tail) = rest.strip_prefix('s') {
            let bytes = tail.as_bytes();
            let mut end = 0;
            if end < bytes.len() && bytes[end] == b'-' {
                end += 1;
            }
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if end == 0 || (end == 1 && bytes[0] == b'-') {
                return Err(Error::Parse(format!("expected an index after 's' in {:?}", s)));
            }
            let code: i64 = tail[..end]
                .parse()
                .map_err(|e| Error::Parse(format!("bad reflection index in {:?}: {}", s, e)))?;
            let simple = Simple::from_code(code, d.rank(), d.components().len())?;
            x = affweyl::multiply(d, &x, &affweyl::simple_element(d, simple));
            rest = &tail[end..];
        } else {
            return Err(Error::Parse(format!("cannot parse element {:?} at {:?}", s, rest)));
        }
    }
    Ok(x)
}

fn bigint_from_value(v: &Value) -> Result<BigInt> {
    if let Some(n) = v.as_i64() {
        return Ok(BigInt::from(n));
    }
    if let Some(s) = v.as_str() {
        return s
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {:?}: {}", s, e)));
    }
    Err(Error::Parse(format!("expected an integer (number or string), found {}", v)))
}

fn poly_from_value(v: &Value) -> Result<LaurentPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("poly must be an array of [exp, coeff] pairs".into()))?;
    let mut pairs = Vec::with_capacity(arr.len());
    for pair in arr {
        let pair = pair
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Error::Parse(format!("bad poly term {}", pair)))?;
        let exp = pair[0]
            .as_i64()
            .ok_or_else(|| Error::Parse(format!("bad exponent {}", pair[0])))?;
        pairs.push((exp, bigint_from_value(&pair[1])?));
    }
    Ok(LaurentPoly::from_pairs(pairs))
}

fn parse_hecke(d: &RootDatum, s: &str) -> Result<HeckeElement> {
    let trimmed = s.trim();
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("bad Hecke JSON: {}", e)))?;
        if let Some(terms) = v.get("terms") {
            let arr = terms
                .as_array()
                .ok_or_else(|| Error::Parse("\"terms\" must be an array".into()))?;
            let mut h = HeckeElement::zero();
            for term in arr {
                let el = term
                    .get("element")
                    .ok_or_else(|| Error::Parse("Hecke term is missing \"element\"".into()))?;
                let x = match el {
                    Value::String(w) => parse_word_element(d, w)?,
                    other => element_from_json(d, other)?,
                };
                let p = poly_from_value(
                    term.get("poly")
                        .ok_or_else(|| Error::Parse("Hecke term is missing \"poly\"".into()))?,
                )?;
                h.add_term(x, &p);
            }
            return Ok(h);
        }
        // fall through: a bare element object denotes its T-basis vector
        return Ok(HeckeElement::t_basis(element_from_json(
            d,
            &serde_json::from_str(trimmed)
                .map_err(|e| Error::Parse(format!("bad element JSON: {}", e)))?,
        )?));
    }
    Ok(HeckeElement::t_basis(parse_word_element(d, trimmed)?))
}

fn parse_multiset(d: &RootDatum, s: &str) -> Result<WeightMultiset> {
    let v: Value = serde_json::from_str(s.trim())
        .map_err(|e| Error::Parse(format!("bad multiset JSON: {}", e)))?;
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("multiset must be an array of {coweight, mult}".into()))?;
    let mut ch = WeightMultiset::new();
    for entry in arr {
        let coords: Vec<i64> = serde_json::from_value(
            entry
                .get("coweight")
                .ok_or_else(|| Error::Parse("multiset entry is missing \"coweight\"".into()))?
                .clone(),
        )
        .map_err(|e| Error::Parse(format!("bad coweight: {}", e)))?;
        let nu = parse_coweight_coords(d, coords)?;
        let mult = bigint_from_value(
            entry
                .get("mult")
                .ok_or_else(|| Error::Parse("multiset entry is missing \"mult\"".into()))?,
        )?;
        *ch.entry(nu).or_default() += mult;
    }
    ch.retain(|_, m| *m != BigInt::from(0));
    Ok(ch)
}

fn parse_groupring(d: &RootDatum, s: &str) -> Result<GroupRingElement> {
    let trimmed = s.trim();
    if trimmed.starts_with('[') {
        let v: Value = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("bad group-ring JSON: {}", e)))?;
        let arr = v.as_array().expect("array checked by prefix");
        let mut g = GroupRingElement::zero();
        for entry in arr {
            let el = entry
                .get("element")
                .ok_or_else(|| Error::Parse("group-ring entry is missing \"element\"".into()))?;
            let x = match el {
                Value::String(w) => parse_word_element(d, w)?,
                other => element_from_json(d, other)?,
            };
            let c = bigint_from_value(
                entry
                    .get("coeff")
                    .ok_or_else(|| Error::Parse("group-ring entry is missing \"coeff\"".into()))?,
            )?;
            g.add_term(x, &c);
        }
        return Ok(g);
    }
    Ok(GroupRingElement::basis(parse_element(d, trimmed)?))
}

// ---- output encoding -------------------------------------------------

fn bigint_value(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(n) => json!(n),
        None => json!(c.to_string()),
    }
}

fn element_value(d: &RootDatum, x: &IWElement) -> Value {
    let word: Vec<usize> = d.weyl().word(x.fin()).iter().map(|i| i + 1).collect();
    json!({
        "translation": x.translation().coords(),
        "finite_word": word,
    })
}

fn poly_value(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p.iter().map(|(e, c)| json!([e, bigint_value(c)])).collect();
    Value::Array(terms)
}

fn word_outcome(d: &RootDatum, w: &AffineWord) -> Outcome {
    let letters: Vec<i64> = w.letters.iter().map(|s| s.code()).collect();
    let rendered: Vec<String> = w.letters.iter().map(|s| format!("s{}", s.code())).collect();
    Outcome {
        json: json!({
            "omega": affweyl::render_element(d, &w.omega),
            "letters": letters,
            "length": letters.len(),
        }),
        table: format!(
            "omega: {}\nletters: {}\nlength: {}",
            affweyl::render_element(d, &w.omega),
            if rendered.is_empty() { "(none)".to_string() } else { rendered.join(" ") },
            w.letters.len()
        ),
    }
}

fn element_set_outcome<'a>(d: &RootDatum, set: impl Iterator<Item = &'a IWElement>) -> Outcome {
    let elements: Vec<&IWElement> = set.collect();
    let json_elements: Vec<Value> = elements.iter().map(|x| element_value(d, x)).collect();
    let mut table = format!("count: {}", elements.len());
    for x in &elements {
        table.push_str(&format!("\n{}", affweyl::render_element(d, x)));
    }
    Outcome {
        json: json!({ "count": elements.len(), "elements": json_elements }),
        table,
    }
}

fn hecke_outcome(d: &RootDatum, h: &HeckeElement) -> Outcome {
    let terms: Vec<Value> = h
        .iter()
        .map(|(x, p)| json!({ "element": element_value(d, x), "poly": poly_value(p) }))
        .collect();
    Outcome {
        json: json!({ "terms": terms }),
        table: hecke::render(d, h),
    }
}

fn as_outcome(m: &ASElement) -> Outcome {
    let terms: Vec<Value> = m
        .iter()
        .map(|(nu, p)| json!({ "coweight": nu.coords(), "poly": poly_value(p) }))
        .collect();
    Outcome {
        json: json!({ "terms": terms }),
        table: antispherical::render(m),
    }
}

fn multiset_outcome(ch: &WeightMultiset) -> Outcome {
    let entries: Vec<Value> = ch
        .iter()
        .map(|(nu, m)| json!({ "coweight": nu.coords(), "mult": bigint_value(m) }))
        .collect();
    let mut table = format!("weights: {}", ch.len());
    for (nu, m) in ch {
        table.push_str(&format!("\n{}: {}", nu, m));
    }
    Outcome { json: Value::Array(entries), table }
}

fn groupring_outcome(d: &RootDatum, g: &GroupRingElement) -> Outcome {
    let entries: Vec<Value> = g
        .iter()
        .map(|(x, c)| json!({ "element": element_value(d, x), "coeff": bigint_value(c) }))
        .collect();
    Outcome {
        json: Value::Array(entries),
        table: ktheory::render(d, g),
    }
}

fn classvector_outcome(v: &IWClassVector) -> Outcome {
    let entries: Vec<Value> = v
        .iter()
        .map(|(nu, c)| json!({ "coweight": nu.coords(), "coeff": bigint_value(c) }))
        .collect();
    Outcome {
        json: Value::Array(entries),
        table: ktheory::render_classes(v),
    }
}

// ---- KL cache wiring -------------------------------------------------

fn cache_path(d: &RootDatum, dir: &PathBuf) -> PathBuf {
    let fp = kl::datum_fingerprint(d);
    let prefix: String = fp[..8].iter().map(|b| format!("{:02x}", b)).collect();
    dir.join(format!("kl-{}.klc", prefix))
}

fn with_kl_table<T>(
    d: &RootDatum,
    r: &Request,
    f: impl FnOnce(&KLTable) -> Result<T>,
) -> std::result::Result<T, CliError> {
    let table = KLTable::new(r.max_length);
    let path = r.cache_dir.as_ref().map(|dir| cache_path(d, dir));
    if let Some(p) = &path {
        if p.exists() {
            table.load(d, p).at("--cache-dir")?;
        }
    }
    let out = f(&table).at(&r.verb)?;
    if let Some(p) = &path {
        if let Some(parent) = p.parent() {
            std::fs::create_dir_all(parent)
                .map_err(Error::from)
                .at("--cache-dir")?;
        }
        table.save(d, p).at("--cache-dir")?;
    }
    Ok(out)
}

// ---- selftest --------------------------------------------------------

fn run_selftest(r: &Request) -> (String, i32) {
    let mut names: Vec<String> = vec!["A1".into(), "GL2".into(), "A2".into()];
    if let Some(extra) = r.flags.get("--datum") {
        if !names.iter().any(|n| n == extra) {
            names.push(extra.clone());
        }
    }
    let mut lines = Vec::new();
    let mut results = Vec::new();
    let mut all_pass = true;
    for name in &names {
        let d = match RootDatum::load(name) {
            Ok(d) => d,
            Err(e) => {
                return render_error(&CliError { err: e, location: "--datum".into() });
            }
        };
        for (invariant, pass) in selftest_datum(&d, r.max_length) {
            all_pass &= pass;
            lines.push(format!(
                "{} {}: {}",
                if pass { "ok  " } else { "FAIL" },
                name,
                invariant
            ));
            results.push(json!({ "datum": name, "invariant": invariant, "pass": pass }));
        }
    }
    let exit = if all_pass { 0 } else { 1 };
    if r.table_output {
        (lines.join("\n"), exit)
    } else {
        (json!({ "passed": all_pass, "results": results }).to_string(), exit)
    }
}

/// Samples every element with translation coordinates in `-2..=2` and length
/// at most `cap`.
fn sample_elements(d: &RootDatum, cap: usize) -> Vec<IWElement> {
    let n = d.lattice_rank();
    let mut out = Vec::new();
    let mut coords = vec![-2i64; n];
    loop {
        for w in d.weyl().elements() {
            let x = IWElement::new(Coweight(coords.clone()), w);
            if affweyl::length(d, &x) <= cap {
                out.push(x);
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            coords[i] += 1;
            if coords[i] <= 2 {
                break;
            }
            coords[i] = -2;
            i += 1;
        }
    }
}

fn selftest_datum(d: &RootDatum, max_length: usize) -> Vec<(&'static str, bool)> {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    let mut out = Vec::new();
    let mut rng = StdRng::seed_from_u64(0x5e1f7e57);
    let n = d.lattice_rank();
    let cap = max_length.min(4);
    let sample = sample_elements(d, cap);

    // dominant translations: length equals the pairing with 2rho
    let mut pass = true;
    for _ in 0..25 {
        let nu = Coweight((0..n).map(|_| rng.gen_range(0..=3)).collect());
        let (dom, _) = d.dominant_representative(&nu);
        let t = IWElement::translation_of(dom.clone());
        pass &= affweyl::length(d, &t) as i64 == d.two_rho_pairing(&dom);
    }
    out.push(("translation-length", pass));

    // reduced words evaluate back to their element
    let mut pass = true;
    for x in &sample {
        let w = affweyl::reduced_word(d, x);
        pass &= affweyl::evaluate_word(d, &w) == *x;
        pass &= w.letters.len() == affweyl::length(d, x);
    }
    out.push(("reduced-word-roundtrip", pass));

    // quadratic relation for every simple reflection
    let mut pass = true;
    let vmv = LaurentPoly::v() - LaurentPoly::v_pow(-1);
    for s in affweyl::simple_reflections(d) {
        let ts = HeckeElement::t_basis(affweyl::simple_element(d, s));
        let sq = hecke::multiply(d, &ts, &ts);
        let expected = &HeckeElement::one(d) + &ts.scaled(&vmv);
        pass &= sq == expected;
    }
    out.push(("quadratic-relation", pass));

    // associativity on random short products
    let mut pass = true;
    for _ in 0..10 {
        let pick = |rng: &mut StdRng| {
            let i = rng.gen_range(0..sample.len());
            HeckeElement::t_basis(sample[i].clone())
        };
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let ab_c = hecke::multiply(d, &hecke::multiply(d, &a, &b), &c);
        let a_bc = hecke::multiply(d, &a, &hecke::multiply(d, &b, &c));
        pass &= ab_c == a_bc;
    }
    out.push(("hecke-associativity", pass));

    // Bernstein elements are group-like in nu
    let mut pass = true;
    for _ in 0..6 {
        let nu = Coweight((0..n).map(|_| rng.gen_range(-1..=1)).collect());
        let mu = Coweight((0..n).map(|_| rng.gen_range(-1..=1)).collect());
        let prod = hecke::multiply(
            d,
            &hecke::bernstein_theta(d, &nu),
            &hecke::bernstein_theta(d, &mu),
        );
        pass &= prod == hecke::bernstein_theta(d, &nu.add(&mu));
    }
    out.push(("theta-additivity", pass));

    // the central element of a small orbit character is central
    let e1 = Coweight({
        let mut c = vec![0; n];
        c[0] = 1;
        c
    });
    let mut ch = hecke::OrbitCharacter::new();
    for img in d.weyl_orbit(&e1) {
        ch.insert(img, BigInt::from(1));
    }
    let pass = match hecke::central_element(d, &ch) {
        Ok(z) => hecke::is_central(d, &z),
        Err(_) => false,
    };
    out.push(("centrality", pass));

    // canonical basis: bar invariance shape, degree bounds, nonnegativity
    let table = KLTable::new(max_length);
    let mut pass = true;
    for w in &sample {
        let c = match table.basis_element(d, w) {
            Ok(c) => c,
            Err(_) => {
                pass = false;
                break;
            }
        };
        for (x, p) in c.iter() {
            if x == w {
                pass &= p.is_one();
            } else {
                pass &= p.max_exp().map_or(true, |e| e <= -1);
            }
            match kl::kl_polynomial(d, &table, x, w) {
                Ok(q) => pass &= q.is_nonnegative(),
                Err(_) => pass = false,
            }
        }
    }
    out.push(("kl-degree-bounds", pass));

    // antispherical kernel dichotomy
    let mut pass = true;
    for w in &sample {
        match antispherical::kernel_check(d, &table, w, SignConvention::Sign) {
            Ok(zero) => pass &= zero == !affweyl::is_minimal_in_left_wfin_coset(d, w),
            Err(_) => pass = false,
        }
    }
    out.push(("kernel-dichotomy", pass));

    // K-group: central class matches the specialized central element and
    // averaging reads the character back
    let pass = match (hecke::central_element(d, &ch), ktheory::class_central(d, &ch)) {
        (Ok(z), Ok(g)) => {
            ktheory::specialize_at_one(&z) == g
                && ktheory::av_iw(d, &g) == IWClassVector::from_character(&ch)
        }
        _ => false,
    };
    out.push(("averaging-multiplicity", pass));

    // character mass equals the Weyl dimension
    let mut pass = true;
    let mut tried = 0;
    'outer: for a in 0..=2i64 {
        for b in 0..=2i64 {
            if tried >= 4 {
                break 'outer;
            }
            let mut c = vec![0; n];
            c[0] = a + b;
            if n > 1 {
                c[1] = b;
            }
            let mu = Coweight(c);
            if !d.is_dominant(&mu) || d.two_rho_pairing(&mu) > 6 {
                continue;
            }
            tried += 1;
            match (dualrep::irreducible_character(d, &mu), dualrep::weyl_dimension(d, &mu)) {
                (Ok(ch), Ok(dim)) => pass &= dualrep::total_dimension(&ch) == dim,
                _ => pass = false,
            }
        }
    }
    out.push(("character-mass", pass && tried > 0));

    out
}
