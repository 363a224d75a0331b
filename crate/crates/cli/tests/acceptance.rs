//! The acceptance suite: one PASS/FAIL line per criterion, nonzero exit on
//! any FAIL.

use std::process::Command;
use std::time::{Duration, Instant};

use strtopo::cyclic::{check_complexes, homology_ranks, ComplexKind};
use strtopo::exact::int;
use strtopo::frobenius::{builtin, builtin_names, to_document, validate_frobenius, Tables};
use strtopo::lie::{check_lie_bialgebra, LieSweep};
use strtopo::quant::{
    check_differential, check_hopf, check_quantization, pbw_check, HopfSweep, Quantizer,
};
use strtopo::report::IdentityReport;
use strtopo::FrobeniusAlgebra;

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: false,
        detail: detail.into(),
    }
}

fn alg(name: &str) -> FrobeniusAlgebra {
    builtin(name).expect("built-in")
}

/// The first failing identity of a report, as `name: witness`.
fn first_failure(r: &IdentityReport) -> String {
    r.results
        .iter()
        .find(|x| !x.passed && x.blocking)
        .map(|x| {
            let w: String = x
                .witness
                .clone()
                .unwrap_or_default()
                .chars()
                .take(120)
                .collect();
            format!(
                "{} ({} of {} cases), witness {w}...",
                x.identity, x.failures, x.cases
            )
        })
        .unwrap_or_default()
}

fn cases(r: &IdentityReport) -> usize {
    r.results
        .iter()
        .filter(|x| x.blocking)
        .map(|x| x.cases)
        .sum()
}

/// Each structure constant of the product and coproduct tables doubled, and
/// each one dropped.
fn mutations(t: &Tables) -> Vec<Tables> {
    let mut out = Vec::new();
    for scale in [int(2), int(0)] {
        for key in t.product.keys() {
            for (z, c) in t.product[key].iter() {
                let mut m = t.clone();
                m.product.get_mut(key).unwrap().add_term(*z, c * &scale - c);
                out.push(m);
            }
        }
        for (k, lin) in t.coproduct.iter().enumerate() {
            for (z, c) in lin.iter() {
                let mut m = t.clone();
                m.coproduct[k].add_term(*z, c * &scale - c);
                out.push(m);
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    for name in builtin_names() {
        let r = validate_frobenius(&alg(name));
        if !r.passed() {
            return fail(format!(
                "{name} fails {:?}",
                r.failures().map(|f| f.axiom.clone()).collect::<Vec<_>>()
            ));
        }
    }
    let all = mutations(alg("S2xS2").tables());
    let picked: Vec<&Tables> = (0..20).map(|i| &all[i * all.len() / 20]).collect();
    for (i, t) in picked.iter().enumerate() {
        let a = FrobeniusAlgebra::new((*t).clone()).expect("mutated tables load");
        let r = validate_frobenius(&a);
        if !r.failures().any(|f| f.witness.is_some()) {
            return fail(format!("mutation {i} of S2xS2 passes every axiom"));
        }
    }
    pass(format!("{} built-ins valid; 20 of {} single-constant mutations of S2xS2 each caught with a witness", builtin_names().len(), all.len()))
}

fn criterion_2() -> Outcome {
    let mut total = 0;
    for name in builtin_names() {
        let r = check_complexes(&alg(name), 6, 5);
        if !r.passed() {
            return fail(format!("{name}: {}", first_failure(&r)));
        }
        total += cases(&r);
    }
    pass(format!(
        "b² = 0 to length 6, B² = 0 and bB + Bb = 0 to length 5 on every built-in ({total} cases)"
    ))
}

fn criterion_3() -> Outcome {
    let s2 = homology_ranks(&alg("S2"), ComplexKind::Cyclic, 0..=9, None).expect("S2 table");
    let want: Vec<(i64, usize)> = (0..=9)
        .map(|d| (d, usize::from(d >= 2 && d % 2 == 0)))
        .collect();
    if s2.dimensions() != want {
        return fail(format!("S2: {:?}", s2.dimensions()));
    }
    let s3 = homology_ranks(&alg("S3"), ComplexKind::Cyclic, 0..=10, None).expect("S3 table");
    let want: Vec<(i64, usize)> = (0..=10)
        .map(|d| (d, usize::from(d >= 3 && d % 2 == 1)))
        .collect();
    if s3.dimensions() != want {
        return fail(format!("S3: {:?}", s3.dimensions()));
    }
    pass("S2 has 1 in degrees 2,4,6,8; S3 has 1 in degrees 3,5,7,9; 0 elsewhere")
}

fn criterion_4() -> Outcome {
    let mut total = 0;
    for name in ["S2xS2", "S3", "CP2"] {
        let r = check_lie_bialgebra(&alg(name), LieSweep::new(4));
        if !r.passed() {
            return fail(format!("{name}: {}", first_failure(&r)));
        }
        total += cases(&r);
    }
    pass(format!(
        "every Lie bialgebra identity exact on S2xS2, S3, CP2 ({total} cases)"
    ))
}

fn criterion_5() -> Outcome {
    let a = alg("S2xS2");
    let full = check_differential(&Quantizer::new(&a).unreduced(), 5, 200, 0);
    let coideal = check_differential(&Quantizer::new(&a), 5, 200, 0);
    let note = if coideal.passed() {
        "coideal letters also pass".to_string()
    } else {
        format!("coideal letters alone FAIL, {}", first_failure(&coideal))
    };
    if full.passed() {
        pass(format!("with all basis elements as letters: b² = 0 and rewriting commutes with b ({} cases); {note}", cases(&full)))
    } else {
        fail(format!("{}; {note}", first_failure(&full)))
    }
}

fn criterion_6() -> Outcome {
    let mut total = 0;
    let mut notes = Vec::new();
    for (name, n) in [("S2xS2", 4), ("S2", 5)] {
        let a = alg(name);
        let r = check_hopf(&Quantizer::new(&a).unreduced(), HopfSweep::new(n))
            .expect("integral h-exponents");
        if !r.passed() {
            return fail(format!("{name}: {}", first_failure(&r)));
        }
        total += cases(&r);
        let c = check_hopf(&Quantizer::new(&a), HopfSweep::new(n)).expect("integral h-exponents");
        if !c.passed() {
            notes.push(format!(
                "coideal letters alone on {name} FAIL, {}",
                first_failure(&c)
            ));
        }
    }
    let note = if notes.is_empty() {
        "coideal letters also pass".to_string()
    } else {
        notes.join("; ")
    };
    pass(format!("with all basis elements as letters: Δ multiplicative, coassociative, Δb = (b⊗1 + 1⊗b)Δ, integral h-exponents ({total} cases); {note}"))
}

fn criterion_7() -> Outcome {
    let a = alg("S2xS2");
    let mut total = 0;
    for q in [Quantizer::new(&a), Quantizer::new(&a).unreduced()] {
        let r = check_quantization(&q, 4, 3).expect("integral h-exponents");
        if !r.passed() {
            return fail(first_failure(&r));
        }
        total += cases(&r);
    }
    pass(format!(
        "cobracket and commutator congruences on S2xS2 with either letter set ({total} cases)"
    ))
}

fn criterion_8() -> Outcome {
    let s = alg("S2xS2");
    let r = pbw_check(&Quantizer::new(&s), 5, 200, 0);
    if !r.passed() {
        return fail(format!("S2xS2: {}", first_failure(&r.identities)));
    }
    let a = alg("S3");
    let mut rows = 0;
    for q in [Quantizer::new(&a), Quantizer::new(&a).unreduced()] {
        let r = pbw_check(&q, 6, 200, 0);
        if !r.passed() {
            return fail(format!("S3: {}", first_failure(&r.identities)));
        }
        rows += r.rows.len();
    }
    pass(format!("normal forms strategy independent on 200 scrambles; S3 ranks of A/hA match the symmetric algebra in {rows} degrees"))
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_strtopo"))
        .args(args)
        .output()
        .expect("run the CLI");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_9() -> Outcome {
    let dir = std::env::temp_dir().join(format!("strtopo-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let mut t = alg("S2xS2").tables().clone();
    let (ia, ib) = (t.index("a"), t.index("b"));
    let (z, c) = t.product[&(ia, ib)]
        .iter()
        .next()
        .map(|(z, c)| (*z, c.clone()))
        .unwrap();
    t.product.get_mut(&(ia, ib)).unwrap().add_term(z, c);
    let mutated = dir.join("mutated.txt");
    std::fs::write(&mutated, to_document(&FrobeniusAlgebra::new(t).unwrap())).unwrap();
    let malformed = dir.join("malformed.txt");
    std::fs::write(&malformed, "name broken\nbasis\n  e0 zero\n").unwrap();
    let (mutated, malformed) = (
        mutated.to_str().unwrap().to_string(),
        malformed.to_str().unwrap().to_string(),
    );

    let runs: [&[&str]; 3] = [
        &[
            "check-hopf",
            "--builtin",
            "S2xS2",
            "--max-len",
            "3",
            "--all-letters",
            "--seed",
            "5",
            "--emit",
            "json",
        ],
        &[
            "pbw-check",
            "--builtin",
            "S2xS2",
            "--max-len",
            "3",
            "--seed",
            "5",
        ],
        &[
            "homology",
            "--builtin",
            "S2",
            "--cyclic",
            "--max-degree",
            "8",
        ],
    ];
    for args in runs {
        let (c1, o1) = cli(args);
        let (c2, o2) = cli(args);
        if c1 != 0 || c1 != c2 || o1 != o2 {
            return fail(format!("`{}` is not reproducible or fails", args.join(" ")));
        }
    }
    let expect = [
        (vec!["validate", "--builtin", "S2xS2"], 0),
        (vec!["check-lie", "--builtin", "S2xS2", "--max-len", "4"], 0),
        (vec!["validate", "--file", mutated.as_str()], 1),
        (
            vec!["check-lie", "--file", mutated.as_str(), "--max-len", "3"],
            1,
        ),
        (vec!["validate", "--file", malformed.as_str()], 2),
        (vec!["validate", "--builtin", "nowhere"], 2),
        (vec!["no-such-command"], 2),
        (vec!["check-hopf", "--builtin", "S2", "--max-len", "9"], 2),
    ];
    for (args, code) in &expect {
        let (got, _) = cli(args);
        if got != *code {
            return fail(format!(
                "`{}` exited {got}, expected {code}",
                args.join(" ")
            ));
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    pass("byte-identical reruns; exit 0 on pass, 1 on a mutated algebra, 2 on malformed input")
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 9] = [
        ("Frobenius validator", criterion_1, 5),
        ("b² and B identities", criterion_2, 60),
        ("homology tables", criterion_3, 30),
        ("Lie bialgebra suite", criterion_4, 600),
        ("quantization differential", criterion_5, 600),
        ("Hopf suite", criterion_6, 900),
        ("quantization congruence", criterion_7, 600),
        ("PBW basis", criterion_8, 300),
        ("CLI contract", criterion_9, 600),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut o = run();
        let took = start.elapsed();
        if took > Duration::from_secs(*limit) {
            o = fail(format!("took {took:.1?}, limit {limit} s; {}", o.detail));
        }
        if !o.passed {
            failed += 1;
        }
        println!(
            "{} criterion {} {name} [{took:.2?}]: {}",
            if o.passed { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
