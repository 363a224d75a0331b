use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use strtopo::cyclic::{canonical, check_complexes, homology_ranks, ComplexKind, CyclicClass, Word};
use strtopo::exact::fmt_rat;
use strtopo::frobenius::{builtin, builtin_names, load_frobenius, validate_frobenius};
use strtopo::lie::{
    bracket_classes, check_lie_bialgebra, cobracket_class, LieElement, LieSweep, TensorSquare,
};
use strtopo::quant::*;
use strtopo::report::IdentityReport;
use strtopo::{Error, FrobeniusAlgebra};

#[derive(Parser)]
#[command(
    name = "strtopo",
    version,
    about = "Cyclic homology, necklace Lie bialgebras and their height quantization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Built-in algebra name.
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,
    /// Path to an algebra document.
    #[arg(long)]
    file: Option<String>,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
}

#[derive(Args, Clone)]
struct QuantOpts {
    /// Use every basis element as a letter (C = V) instead of the coideal letters.
    #[arg(long)]
    all_letters: bool,
    /// Refuse monomials or sweeps with more letters than this.
    #[arg(long, default_value_t = 6)]
    letter_cap: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of the algebra.
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Homology dimensions per degree.
    Homology {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "hochschild")]
        cyclic: bool,
        #[arg(long)]
        hochschild: bool,
        #[arg(long, default_value_t = 0)]
        min_degree: i64,
        #[arg(long)]
        max_degree: i64,
        /// Word-length cutoff, required when the algebra is not simply connected.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Bracket of two cyclic words, e.g. `a|t` and `b`.
    Bracket {
        #[command(flatten)]
        common: Common,
        x: String,
        y: String,
    },
    /// Cobracket of a cyclic word.
    Cobracket {
        #[command(flatten)]
        common: Common,
        x: String,
    },
    /// Exhaustive sweep of the Lie bialgebra identities.
    CheckLie {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Exhaustive sweep of b² = 0, B² = 0 and bB + Bb = 0.
    CheckComplex {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 5)]
        max_len_connes: usize,
    },
    /// Product of two elements such as `N[(a,1)|(t,2)]`, in normal form.
    Qmul {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        quant: QuantOpts,
        x: String,
        y: String,
    },
    /// The n-fold coproduct of an element.
    Qcoproduct {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        quant: QuantOpts,
        x: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// The height differential of an element, in normal form.
    Qdiff {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        quant: QuantOpts,
        x: String,
    },
    /// The antipode: heights negated, or the recursive convolution inverse.
    Antipode {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        quant: QuantOpts,
        x: String,
        #[arg(long)]
        recursive: bool,
    },
    /// Height differential identities on the PBW basis and on scrambles.
    CheckDifferential {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        quant: QuantOpts,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 200)]
        scrambles: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bialgebra identities on the PBW basis.
    CheckHopf {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        quant: QuantOpts,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 200)]
        scrambles: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Quantization congruences against the Lie bialgebra.
    CheckQuantization {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        quant: QuantOpts,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        bracket_len: usize,
    },
    /// Strategy independence and ranks of the PBW basis.
    PbwCheck {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        quant: QuantOpts,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 200)]
        scrambles: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failed run: input errors exit 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type Run = Result<bool, InputError>;

fn load(c: &Common) -> Result<FrobeniusAlgebra, InputError> {
    match (&c.builtin, &c.file) {
        (Some(name), None) => builtin(name).ok_or_else(|| {
            InputError(format!(
                "unknown built-in `{name}` (known: {})",
                builtin_names().join(", ")
            ))
        }),
        (None, Some(path)) => {
            let doc = std::fs::read_to_string(path)
                .map_err(|e| InputError(format!("cannot read `{path}`: {e}")))?;
            Ok(load_frobenius(&doc)?)
        }
        _ => Err(InputError("give exactly one of --builtin or --file".into())),
    }
}

fn positive(name: &str, v: usize) -> Result<(), InputError> {
    if v == 0 {
        return Err(InputError(format!("--{name} must be positive")));
    }
    Ok(())
}

fn capped(q: &QuantOpts, letters: usize) -> Result<(), InputError> {
    if letters > q.letter_cap {
        return Err(InputError(format!(
            "bound exceeded: {letters} letters, cap is {} (raise --letter-cap)",
            q.letter_cap
        )));
    }
    Ok(())
}

fn quantizer<'a>(a: &'a FrobeniusAlgebra, q: &QuantOpts) -> Quantizer<'a> {
    if q.all_letters {
        Quantizer::new(a).unreduced()
    } else {
        Quantizer::new(a)
    }
}

fn element(q: &Quantizer, o: &QuantOpts, s: &str) -> Result<QuantElement, InputError> {
    let x = q.parse(s)?;
    let letters = x.iter().map(|((m, _), _)| m.len()).max().unwrap_or(0);
    capped(o, letters)?;
    Ok(x)
}

fn class(a: &FrobeniusAlgebra, s: &str) -> Result<Option<(CyclicClass, i32)>, InputError> {
    let body = s
        .trim()
        .strip_prefix("N[")
        .and_then(|r| r.strip_suffix(']'))
        .unwrap_or(s.trim());
    let mut w = Vec::new();
    for name in body.split('|') {
        let x = a
            .index_of(name.trim())
            .ok_or_else(|| InputError(format!("unknown generator `{}`", name.trim())))?;
        if !a.letters().contains(&x) {
            return Err(InputError(format!(
                "`{}` is not a coideal letter",
                name.trim()
            )));
        }
        w.push(x);
    }
    Ok(canonical(a, &Word(w)).map(|(r, s)| (CyclicClass { representative: r }, s)))
}

fn emit_json(v: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("reports serialize")
    );
}

fn emit_report(c: &Common, r: &IdentityReport) -> bool {
    match c.emit {
        Emit::Text => print!("{r}"),
        Emit::Json => emit_json(r),
    }
    r.passed()
}

fn element_json(a: &FrobeniusAlgebra, x: &QuantElement) -> serde_json::Value {
    let terms: Vec<_> = x
        .iter()
        .map(|((m, e), c)| json!({ "coefficient": fmt_rat(c), "h_exponent": e, "monomial": m.display(a) }))
        .collect();
    json!({ "text": fmt_element(a, x), "terms": terms })
}

fn tensor_json(a: &FrobeniusAlgebra, t: &QuantTensor) -> serde_json::Value {
    let terms: Vec<_> = t
        .iter()
        .map(|((ms, e), c)| {
            let slots: Vec<String> = ms.iter().map(|m| m.display(a)).collect();
            json!({ "coefficient": fmt_rat(c), "h_exponent": e, "slots": slots })
        })
        .collect();
    json!({ "text": fmt_tensor(a, t), "terms": terms })
}

fn show_lie(a: &FrobeniusAlgebra, x: &LieElement) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|(k, c)| format!("{} {}", fmt_rat(c), k.display(a)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn show_square(a: &FrobeniusAlgebra, t: &TensorSquare) -> String {
    if t.is_zero() {
        return "0".into();
    }
    t.iter()
        .map(|((u, v), c)| format!("{} {} ⊗ {}", fmt_rat(c), u.display(a), v.display(a)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn print_value(c: &Common, text: &str, value: serde_json::Value) {
    match c.emit {
        Emit::Text => println!("{text}"),
        Emit::Json => emit_json(&value),
    }
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Validate { common } => {
            let a = load(&common)?;
            let r = validate_frobenius(&a);
            match common.emit {
                Emit::Text => print!("{r}"),
                Emit::Json => emit_json(&r),
            }
            Ok(r.passed())
        }
        Command::Homology {
            common,
            cyclic,
            hochschild,
            min_degree,
            max_degree,
            max_len,
        } => {
            let a = load(&common)?;
            if !cyclic && !hochschild {
                return Err(InputError("choose --cyclic or --hochschild".into()));
            }
            if max_degree < min_degree {
                return Err(InputError("--max-degree is below --min-degree".into()));
            }
            let kind = if cyclic {
                ComplexKind::Cyclic
            } else {
                ComplexKind::Hochschild
            };
            let t = homology_ranks(&a, kind, min_degree..=max_degree, max_len)?;
            match common.emit {
                Emit::Text => print!("{t}"),
                Emit::Json => emit_json(&t),
            }
            Ok(true)
        }
        Command::Bracket { common, x, y } => {
            let a = load(&common)?;
            let (cx, cy) = (class(&a, &x)?, class(&a, &y)?);
            let r = match (cx, cy) {
                (Some((u, su)), Some((v, sv))) => {
                    bracket_classes(&a, &u, &v).scaled(&strtopo::exact::sgn(su * sv))
                }
                _ => LieElement::new(),
            };
            let terms: Vec<_> = r
                .iter()
                .map(|(k, c)| json!({ "coefficient": fmt_rat(c), "class": k.display(&a) }))
                .collect();
            print_value(
                &common,
                &show_lie(&a, &r),
                json!({ "text": show_lie(&a, &r), "terms": terms }),
            );
            Ok(true)
        }
        Command::Cobracket { common, x } => {
            let a = load(&common)?;
            let r = match class(&a, &x)? {
                Some((u, s)) => cobracket_class(&a, &u).scaled(&strtopo::exact::sgn(s)),
                None => TensorSquare::new(),
            };
            let terms: Vec<_> = r
                .iter()
                .map(|((u, v), c)| json!({ "coefficient": fmt_rat(c), "left": u.display(&a), "right": v.display(&a) }))
                .collect();
            print_value(
                &common,
                &show_square(&a, &r),
                json!({ "text": show_square(&a, &r), "terms": terms }),
            );
            Ok(true)
        }
        Command::CheckLie { common, max_len } => {
            positive("max-len", max_len)?;
            let a = load(&common)?;
            Ok(emit_report(
                &common,
                &check_lie_bialgebra(&a, LieSweep::new(max_len)),
            ))
        }
        Command::CheckComplex {
            common,
            max_len,
            max_len_connes,
        } => {
            positive("max-len", max_len)?;
            positive("max-len-connes", max_len_connes)?;
            let a = load(&common)?;
            Ok(emit_report(
                &common,
                &check_complexes(&a, max_len, max_len_connes),
            ))
        }
        Command::Qmul {
            common,
            quant,
            x,
            y,
        } => {
            let a = load(&common)?;
            let q = quantizer(&a, &quant);
            let (x, y) = (element(&q, &quant, &x)?, element(&q, &quant, &y)?);
            let len = |e: &QuantElement| e.iter().map(|((m, _), _)| m.len()).max().unwrap_or(0);
            capped(&quant, len(&x) + len(&y))?;
            let p = q.mul(&x, &y);
            print_value(&common, &fmt_element(&a, &p), element_json(&a, &p));
            Ok(true)
        }
        Command::Qcoproduct {
            common,
            quant,
            x,
            n,
        } => {
            if n < 2 {
                return Err(InputError("--n must be at least 2".into()));
            }
            let a = load(&common)?;
            let q = quantizer(&a, &quant);
            let x = element(&q, &quant, &x)?;
            let d = q.coproduct_n(&x, n)?;
            print_value(&common, &fmt_tensor(&a, &d), tensor_json(&a, &d));
            Ok(true)
        }
        Command::Qdiff { common, quant, x } => {
            let a = load(&common)?;
            let q = quantizer(&a, &quant);
            let x = element(&q, &quant, &x)?;
            let d = q.quant_b(&x);
            print_value(&common, &fmt_element(&a, &d), element_json(&a, &d));
            Ok(true)
        }
        Command::Antipode {
            common,
            quant,
            x,
            recursive,
        } => {
            let a = load(&common)?;
            let q = quantizer(&a, &quant);
            let x = element(&q, &quant, &x)?;
            let s = if recursive {
                q.antipode_recursive(&x)?
            } else {
                q.antipode(&x)
            };
            print_value(&common, &fmt_element(&a, &s), element_json(&a, &s));
            Ok(true)
        }
        Command::CheckDifferential {
            common,
            quant,
            max_len,
            scrambles,
            seed,
        } => {
            positive("max-len", max_len)?;
            capped(&quant, max_len)?;
            let a = load(&common)?;
            let q = quantizer(&a, &quant);
            Ok(emit_report(
                &common,
                &check_differential(&q, max_len, scrambles, seed),
            ))
        }
        Command::CheckHopf {
            common,
            quant,
            max_len,
            scrambles,
            seed,
        } => {
            positive("max-len", max_len)?;
            capped(&quant, max_len)?;
            let a = load(&common)?;
            let q = quantizer(&a, &quant);
            let sweep = HopfSweep {
                max_letters: max_len,
                scrambles,
                seed,
            };
            Ok(emit_report(&common, &check_hopf(&q, sweep)?))
        }
        Command::CheckQuantization {
            common,
            quant,
            max_len,
            bracket_len,
        } => {
            positive("max-len", max_len)?;
            positive("bracket-len", bracket_len)?;
            capped(&quant, max_len.max(2 * bracket_len))?;
            let a = load(&common)?;
            let q = quantizer(&a, &quant);
            Ok(emit_report(
                &common,
                &check_quantization(&q, max_len, bracket_len)?,
            ))
        }
        Command::PbwCheck {
            common,
            quant,
            max_len,
            scrambles,
            seed,
        } => {
            positive("max-len", max_len)?;
            capped(&quant, max_len)?;
            let a = load(&common)?;
            let q = quantizer(&a, &quant);
            let r = pbw_check(&q, max_len, scrambles, seed);
            match common.emit {
                Emit::Text => {
                    print!("{}", r.identities);
                    println!("{:>8}  {:>6}  {:>8}", "degree", "rank", "expected");
                    for row in &r.rows {
                        println!("{:>8}  {:>6}  {:>8}", row.degree, row.rank, row.expected);
                    }
                }
                Emit::Json => emit_json(&r),
            }
            Ok(r.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
