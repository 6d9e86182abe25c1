//! Acceptance criteria, one line of output per criterion.
//!
//! Lines are written straight to stderr so they appear even when the test
//! harness captures output.

mod common;

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use common::{
    append, contains_eot, letter_strings, nested_car_cdr, outcome, random_list, random_tree,
    split_at, sym,
};
use cxr::locator::{prefix, read, suffix, write};
use cxr::{
    compile_classic, normalize_star, parse_ltr, parse_sexpr, parse_star, run, translate, Locator,
    Notation, Program, Statement, Tree,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x00CA_DADA;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cxr(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_cxr"))
        .args(args)
        .output()
        .expect("spawn cxr");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

type Verdict = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, started: Instant) -> Result<Duration, String> {
    let took = started.elapsed();
    check(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

/// Every value produced by criteria 2-5, for the EOT scan.
#[derive(Default)]
struct Outputs(Vec<Tree>);

impl Outputs {
    fn record(&mut self, result: &Result<Tree, (cxr::AccessKind, usize)>) {
        if let Ok(t) = result {
            self.0.push(t.clone());
        }
    }
}

fn criterion_1() -> Verdict {
    let started = Instant::now();
    let plain = cxr(&["eval", "classic", "cadadr", "(0 (1 2 3) 4 5)"]);
    check(plain.code == 0 && plain.stdout == "2\n", || {
        format!("eval printed {:?} (exit {})", plain.stdout, plain.code)
    })?;
    let traced = cxr(&["eval", "--trace", "classic", "cadadr", "(0 (1 2 3) 4 5)"]);
    let expected = [
        "1\tcadad\t(0 (1 2 3) 4 5)\tdrop → ((1 2 3) 4 5)",
        "2\tcada\t((1 2 3) 4 5)\taccess → (1 2 3)",
        "3\tcad\t(1 2 3)\tdrop → (2 3)",
        "4\tca\t(2 3)\taccess → 2",
        "5\tc\t2\tcomplete",
        "2",
    ];
    let lines: Vec<&str> = traced.stdout.lines().collect();
    check(traced.code == 0 && lines == expected, || {
        format!("trace was {lines:?}")
    })?;
    let took = within(Duration::from_secs(1), started)?;
    Ok(format!("result 2 and 5-row trace byte-exact in {took:?}"))
}

fn criterion_2(outputs: &mut Outputs) -> Verdict {
    let started = Instant::now();
    let symbols: Vec<String> = (1..=4)
        .flat_map(letter_strings)
        .map(|letters| format!("c{letters}r"))
        .collect();
    check(symbols.len() == 30, || format!("{} symbols", symbols.len()))?;

    let mut rng = StdRng::seed_from_u64(SEED);
    let mut corpus = vec![
        Tree::Nil,
        Tree::int(7),
        sym("a"),
        Tree::cons(sym("a"), sym("b")),
        parse_sexpr("(0 (1 2 3) 4 5)").unwrap(),
    ];
    while corpus.len() < 250 {
        corpus.push(random_tree(&mut rng, 5));
    }
    check(corpus.iter().all(|t| common::depth(t) <= 5), || {
        "corpus too deep".into()
    })?;
    check(
        corpus.iter().any(|t| !t.is_proper_list() && t.is_cons()),
        || "no dotted pairs".into(),
    )?;

    let mut checked = 0;
    for symbol in &symbols {
        let program = compile_classic(symbol).map_err(|e| e.to_string())?;
        for tree in &corpus {
            let got = outcome(run(&program, tree));
            let want = nested_car_cdr(symbol, tree);
            check(got == want, || {
                format!("{symbol} on {tree}: {got:?} != {want:?}")
            })?;
            outputs.record(&got);
            checked += 1;
        }
    }
    let took = within(Duration::from_secs(10), started)?;
    Ok(format!(
        "{checked}/{checked} agree ({} symbols x {} trees) in {took:?}",
        symbols.len(),
        corpus.len()
    ))
}

fn criterion_3(outputs: &mut Outputs) -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED + 3);
    let trees: Vec<Tree> = (0..50).map(|_| random_tree(&mut rng, 5)).collect();
    let mut programs = 0;
    for len in 1..=6 {
        for letters in letter_strings(len) {
            programs += 1;
            let original = format!("c{letters}r");
            let classic = compile_classic(&original).map_err(|e| e.to_string())?;
            let ltr_text = translate(&classic, Notation::Ltr);
            let ltr = parse_ltr(&ltr_text).map_err(|e| e.to_string())?;
            let star_text = translate(&ltr, Notation::Star);
            let star = parse_star(&star_text).map_err(|e| e.to_string())?;
            let back = translate(&star, Notation::Classic);
            check(back == original, || {
                format!("{original} -> {ltr_text} -> {star_text} -> {back}")
            })?;
            for tree in &trees {
                let a = outcome(run(&classic, tree));
                let b = outcome(run(&ltr, tree));
                let c = outcome(run(&star, tree));
                check(a == b && b == c, || {
                    format!("{original} on {tree}: {a:?} / {b:?} / {c:?}")
                })?;
                outputs.record(&a);
            }
        }
    }
    check(programs == 126, || format!("{programs} programs"))?;
    Ok(format!(
        "{programs}/126 round-trip, all agree on {} trees",
        trees.len()
    ))
}

fn random_star_program(rng: &mut StdRng) -> String {
    let mut text = String::from("*");
    for _ in 0..rng.random_range(1..8) {
        match rng.random_range(0..4) {
            0 => {}
            1 => text.push('1'),
            _ => text.push_str(&rng.random_range(2..20).to_string()),
        }
        text.push(if rng.random_bool(0.5) { 'a' } else { 'd' });
    }
    text
}

fn criterion_4(outputs: &mut Outputs) -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED + 4);
    let compact = parse_star("*5da").map_err(|e| e.to_string())?;
    let spelled = parse_star("*ddddda").map_err(|e| e.to_string())?;
    for _ in 0..100 {
        let len = rng.random_range(6..=20);
        let list = random_list(&mut rng, len);
        let a = outcome(run(&compact, &list));
        let b = outcome(run(&spelled, &list));
        let sixth = list.list_elements().unwrap()[5].clone();
        check(a == b && a == Ok(sixth), || {
            format!("on {list}: {a:?} vs {b:?}")
        })?;
        outputs.record(&a);
    }
    let normal = normalize_star("*ddddda").map_err(|e| e.to_string())?;
    check(normal == "*5da", || {
        format!("normalize_star(*ddddda) = {normal}")
    })?;
    for _ in 0..500 {
        let text = random_star_program(&mut rng);
        let once = normalize_star(&text).map_err(|e| format!("{text}: {e}"))?;
        let twice = normalize_star(&once).map_err(|e| e.to_string())?;
        check(once == twice, || format!("{text}: {once} then {twice}"))?;
        let before = parse_star(&text).unwrap();
        let after = parse_star(&once).unwrap();
        check(before.body() == after.body(), || {
            format!("{text} changed meaning")
        })?;
    }
    Ok("*5da == *ddddda on 100 lists; normalize_star idempotent on 500 programs".into())
}

fn criterion_5(outputs: &mut Outputs) -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED + 5);
    let mut cases = 0;
    for len in 1..=10 {
        let list = random_list(&mut rng, len);
        let value = sym("apple");
        for k in 0..len {
            let loc = Locator::new(k);
            let pre = prefix(loc, &list).map_err(|e| e.to_string())?;
            let suf = suffix(loc, &list).map_err(|e| e.to_string())?;
            check(append(&pre, &suf) == list, || {
                format!("reconstruction k={k} on {list}")
            })?;
            let (want_pre, want_suf) = split_at(&list, k);
            check(pre == Tree::list(want_pre) && suf == want_suf, || {
                format!("split k={k} on {list}")
            })?;

            let written = write(loc, &list, value.clone()).map_err(|e| e.to_string())?;
            check(read(loc, &written).as_ref() == Ok(&value), || {
                format!("read-back k={k}")
            })?;
            for j in (0..len).filter(|&j| j != k) {
                let before = read(Locator::new(j), &list);
                let after = read(Locator::new(j), &written);
                check(before == after, || format!("write k={k} disturbed j={j}"))?;
            }
            let written_len = written.list_elements().map(|v| v.len());
            check(written_len == Some(len), || {
                format!("write changed length to {written_len:?}")
            })?;
            check(pre.list_elements().map(|v| v.len()) == Some(k), || {
                format!("prefix length k={k}")
            })?;

            let drops = if k == 0 {
                Ok(list.clone())
            } else {
                let p = Program::from_statements(
                    std::iter::repeat_n(Statement::Drop, k),
                    Notation::Star,
                )
                .unwrap();
                run(&p, &list)
            };
            check(drops.as_ref() == Ok(&suf), || {
                format!("suffix != Drop x {k}")
            })?;
            for t in [&pre, &suf, &written] {
                outputs.record(&Ok((*t).clone()));
            }
            outputs.record(&outcome(read(loc, &list)));
            cases += 1;
        }
    }
    Ok(format!("{cases} (list, k) cases, 0 failures"))
}

fn criterion_6(outputs: &Outputs) -> Verdict {
    let failed = cxr(&["eval", "classic", "cadadr", "(0)"]);
    check(failed.code == 1, || format!("exit {}", failed.code))?;
    check(failed.stdout.is_empty(), || {
        format!("stdout {:?}", failed.stdout)
    })?;
    check(failed.stderr.contains("EndOfList at step 2"), || {
        format!("stderr {:?}", failed.stderr)
    })?;

    let accessed = cxr(&["eval", "cadr", "(a EOT c)"]);
    check(accessed.code == 0 && accessed.stdout == "EOT\n", || {
        format!("{:?}", accessed.stdout)
    })?;
    let located = cxr(&["loc", "read", "*2n", "(a b EOT)"]);
    check(located.code == 0 && located.stdout == "EOT\n", || {
        format!("{:?}", located.stdout)
    })?;
    let printed = parse_sexpr("(EOT . EOT)")
        .map_err(|e| e.to_string())?
        .to_string();
    check(printed == "(EOT . EOT)", || printed.clone())?;

    let synthesized = outputs.0.iter().filter(|t| contains_eot(t)).count();
    check(synthesized == 0, || {
        format!("{synthesized} outputs contain EOT")
    })?;
    Ok(format!(
        "exit 1 with EndOfList at step 2; EOT passes through; 0 of {} outputs synthesize EOT",
        outputs.0.len()
    ))
}

fn criterion_7() -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED + 7);
    for _ in 0..1000 {
        let v = random_tree(&mut rng, 6);
        let text = v.to_string();
        let back = parse_sexpr(&text).map_err(|e| format!("{text}: {e}"))?;
        check(back == v, || format!("{text} re-read as {back}"))?;
    }
    for bad in ["(", "(a . )", ""] {
        let out = cxr(&["eval", "car", bad]);
        check(out.code == 2, || format!("{bad:?} exit {}", out.code))?;
        check(out.stderr.contains("at position "), || {
            format!("{bad:?}: {:?}", out.stderr)
        })?;
    }
    Ok("1000/1000 round-trip; 3 malformed inputs exit 2 with positions".into())
}

#[test]
fn acceptance() {
    let mut outputs = Outputs::default();
    let results = [
        ("1 cadadr example and trace", criterion_1()),
        ("2 exhaustive oracle equivalence", criterion_2(&mut outputs)),
        ("3 notation round-trips", criterion_3(&mut outputs)),
        ("4 repeat-count semantics", criterion_4(&mut outputs)),
        ("5 locator algebra", criterion_5(&mut outputs)),
        ("6 error-channel discipline", criterion_6(&outputs)),
        ("7 reader/printer round-trip", criterion_7()),
    ];
    let mut stderr = std::io::stderr().lock();
    let mut failures = 0;
    for (name, result) in &results {
        let line = match result {
            Ok(detail) => format!("criterion {name}: PASS ({detail})"),
            Err(why) => {
                failures += 1;
                format!("criterion {name}: FAIL ({why})")
            }
        };
        writeln!(stderr, "{line}").unwrap();
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
