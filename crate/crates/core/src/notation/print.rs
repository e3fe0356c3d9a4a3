use std::collections::HashSet;

use super::lexer::is_label_char;
use super::NotationError;
use crate::map::ContinuousMap;
use crate::space::{default_label, FiniteSpace, PointSet};

fn is_identifier(s: &str) -> bool {
    s == "*" || (!s.is_empty() && s.chars().all(is_label_char))
}

/// Names usable in a literal: each label is one or more identifiers joined by
/// `=`, with no identifier shared between points. Falls back to `a`, `b`, ...
fn printable_names(s: &FiniteSpace) -> Vec<String> {
    let mut parts = HashSet::new();
    let ok = s.labels().iter().all(|l| l.split('=').all(|p| is_identifier(p) && parts.insert(p)));
    if ok {
        s.labels().to_vec()
    } else {
        (0..s.len()).map(default_label).collect()
    }
}

/// Chains for a transitive reduction of the preorder: `<->` cycles inside
/// each class of mutually related points, `->` along covering pairs of
/// classes, and any point not yet mentioned on its own.
fn chains(s: &FiniteSpace, names: &[String]) -> Vec<String> {
    let n = s.len();
    let mut rep = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if rep[i] != usize::MAX {
            continue;
        }
        let class: Vec<usize> = (i..n).filter(|&j| s.related(i, j) && s.related(j, i)).collect();
        for &j in &class {
            rep[j] = i;
        }
        classes.push(class);
    }
    let strictly_below = |a: usize, b: usize| s.related(a, b) && !s.related(b, a);
    let mut out = Vec::new();
    let mut mentioned = PointSet::EMPTY;
    for class in &classes {
        if class.len() > 1 {
            out.push(class.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("<->"));
            for &i in class {
                mentioned.insert(i);
            }
        }
    }
    for a in classes.iter().map(|c| c[0]) {
        for b in classes.iter().map(|c| c[0]) {
            if strictly_below(a, b)
                && !classes.iter().map(|c| c[0]).any(|m| strictly_below(a, m) && strictly_below(m, b))
            {
                out.push(format!("{}->{}", names[a], names[b]));
                mentioned.insert(a);
                mentioned.insert(b);
            }
        }
    }
    for (i, name) in names.iter().enumerate().take(n) {
        if !mentioned.contains(i) {
            out.push(name.clone());
        }
    }
    out
}

fn braces(items: Vec<String>) -> String {
    format!("{{{}}}", items.join(", "))
}

pub fn print_space(s: &FiniteSpace) -> String {
    let names = printable_names(s);
    braces(chains(s, &names))
}

/// Transitive-reduction arrows as label pairs (the JSON `arrows` field).
pub fn reduction_arrows(s: &FiniteSpace) -> Vec<(usize, usize)> {
    let n = s.len();
    let mut out = Vec::new();
    let mut done = PointSet::EMPTY;
    for i in 0..n {
        if done.contains(i) {
            continue;
        }
        let class: Vec<usize> = (i..n).filter(|&j| s.related(i, j) && s.related(j, i)).collect();
        if class.len() > 1 {
            for k in 0..class.len() {
                out.push((class[k], class[(k + 1) % class.len()]));
            }
        }
        for &j in &class {
            done.insert(j);
        }
    }
    let reps: Vec<usize> = (0..n)
        .filter(|&i| (0..i).all(|j| !(s.related(i, j) && s.related(j, i))))
        .collect();
    let below = |a: usize, b: usize| s.related(a, b) && !s.related(b, a);
    for &a in &reps {
        for &b in &reps {
            if below(a, b) && !reps.iter().any(|&m| below(a, m) && below(m, b)) {
                out.push((a, b));
            }
        }
    }
    out.sort();
    out
}

/// Prints a map; every codomain point with a non-empty preimage is written
/// as its preimage labels glued with `=`.
pub fn print_map(f: &ContinuousMap) -> Result<String, NotationError> {
    if f.is_endomorphism_shaped() {
        return Err(NotationError::Endomorphism);
    }
    Ok(render_map(f))
}

/// Like [`print_map`], but accepts maps from a space to itself: the printed
/// literal denotes an isomorphic map between two copies of the space.
pub fn print_map_relabeled(f: &ContinuousMap) -> String {
    render_map(f)
}

fn render_map(f: &ContinuousMap) -> String {
    if f.dom().is_empty() && f.cod().len() == 1 {
        return "{} => {*}".to_owned();
    }
    let dom_names = printable_names(f.dom());
    let mut used: HashSet<String> = dom_names
        .iter()
        .flat_map(|l| l.split('=').map(str::to_owned))
        .collect();
    let mut cod_names = vec![String::new(); f.cod().len()];
    for (c, name) in cod_names.iter_mut().enumerate() {
        let pre: Vec<&str> = (0..f.dom().len())
            .filter(|&i| f.apply(i) == c)
            .map(|i| dom_names[i].as_str())
            .collect();
        if !pre.is_empty() {
            *name = pre.join("=");
        }
    }
    for (c, slot) in cod_names.iter_mut().enumerate() {
        if !slot.is_empty() {
            continue;
        }
        let own = f.cod().label(c);
        let fresh = if is_identifier(own) && own != "*" && !used.contains(own) {
            own.to_owned()
        } else {
            (0..)
                .map(|k| format!("y{k}"))
                .find(|cand| !used.contains(cand))
                .expect("fresh label")
        };
        used.insert(fresh.clone());
        *slot = fresh;
    }
    format!(
        "{} => {}",
        braces(chains(f.dom(), &dom_names)),
        braces(chains(f.cod(), &cod_names))
    )
}
