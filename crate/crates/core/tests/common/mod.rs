#![allow(dead_code)]

use cxr::{AccessError, AccessKind, Tree};
use rand::rngs::StdRng;
use rand::Rng;

const SYMBOLS: [&str; 6] = ["a", "b", "c", "x", "y", "apple"];

pub fn sym(name: &str) -> Tree {
    Tree::symbol(name).unwrap()
}

pub fn leaf(rng: &mut StdRng) -> Tree {
    match rng.random_range(0..3) {
        0 => Tree::Nil,
        1 => Tree::int(rng.random_range(-3..10)),
        _ => sym(SYMBOLS[rng.random_range(0..SYMBOLS.len())]),
    }
}

/// Random tree of depth at most `depth`: leaves, proper lists and dotted
/// lists. Never contains the symbol `EOT`.
pub fn random_tree(rng: &mut StdRng, depth: usize) -> Tree {
    if depth == 0 {
        return leaf(rng);
    }
    match rng.random_range(0..10) {
        0..=2 => leaf(rng),
        3..=7 => {
            let n = rng.random_range(0..5);
            Tree::list(
                (0..n)
                    .map(|_| random_tree(rng, depth - 1))
                    .collect::<Vec<_>>(),
            )
        }
        _ => {
            let n = rng.random_range(1..4);
            let items: Vec<Tree> = (0..n).map(|_| random_tree(rng, depth - 1)).collect();
            let tail = match rng.random_range(0..2) {
                0 => Tree::int(rng.random_range(0..10)),
                _ => sym(SYMBOLS[rng.random_range(0..SYMBOLS.len())]),
            };
            Tree::list_with_tail(items, tail)
        }
    }
}

/// Proper list of `len` random elements (each of depth ≤ 2).
pub fn random_list(rng: &mut StdRng, len: usize) -> Tree {
    Tree::list((0..len).map(|_| random_tree(rng, 2)).collect::<Vec<_>>())
}

/// List nesting depth: atoms and `()` are 0, a list is one more than its
/// deepest element (a dotted tail counts as an element).
pub fn depth(tree: &Tree) -> usize {
    let mut deepest = 0;
    let mut cur = tree;
    while let Tree::Cons(pair) = cur {
        deepest = deepest.max(depth(&pair.head));
        cur = &pair.tail;
    }
    if tree.is_cons() {
        1 + deepest
    } else {
        0
    }
}

/// Every string of `a`/`d` of exactly `len` letters.
pub fn letter_strings(len: usize) -> Vec<String> {
    (0..1usize << len)
        .map(|bits| {
            (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 1 {
                        'd'
                    } else {
                        'a'
                    }
                })
                .collect()
        })
        .collect()
}

/// Outcome compared across implementations: value, or error kind + step.
pub type Outcome = Result<Tree, (AccessKind, usize)>;

pub fn outcome(result: Result<Tree, AccessError>) -> Outcome {
    result.map_err(|e| (e.kind, e.step.expect("interpreter errors carry a step")))
}

/// Applies car/cdr by hand, reading the accessor's inner letters from right
/// to left.
pub fn nested_car_cdr(symbol: &str, tree: &Tree) -> Outcome {
    let inner = &symbol[1..symbol.len() - 1];
    let mut cur = tree.clone();
    for (i, letter) in inner.chars().rev().enumerate() {
        let next = match (&cur, letter) {
            (Tree::Cons(pair), 'a') => pair.head.clone(),
            (Tree::Cons(pair), 'd') => pair.tail.clone(),
            (Tree::Nil, _) => return Err((AccessKind::EndOfList, i + 1)),
            (_, 'a' | 'd') => return Err((AccessKind::AtomEncountered, i + 1)),
            _ => panic!("not an accessor letter: {letter}"),
        };
        cur = next;
    }
    Ok(cur)
}

/// Walks `k` tails and collects the elements passed over, without the
/// locator module.
pub fn split_at(list: &Tree, k: usize) -> (Vec<Tree>, Tree) {
    let items = list.list_elements().expect("proper list");
    let rest = Tree::list(items[k..].to_vec());
    (items[..k].to_vec(), rest)
}

pub fn append(prefix: &Tree, suffix: &Tree) -> Tree {
    Tree::list_with_tail(
        prefix.list_elements().expect("proper prefix"),
        suffix.clone(),
    )
}

pub fn contains_eot(tree: &Tree) -> bool {
    tree.any(&mut |t| matches!(t, Tree::Symbol(s) if s.as_str() == "EOT"))
}
