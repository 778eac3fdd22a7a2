//! Plane trees built from link patterns, the ω rewriting to a polynomial, and
//! the closed product formulas for the lower generating functions.

use std::fmt::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linkflip::{link_pattern, Arc};
use crate::pathword::{PathWord, Step};
use crate::qpoly::{one_plus_q_product, q2_binomial, q_binomial, q_factorial, q_int, PolyQ};
use crate::tiling::{genfun_lower, PathType, Statistic};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Node {
    pub children: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    /// Stable identifier; arrows refer to edges by it.
    pub id: usize,
    pub dotted: bool,
    /// Arc of the link pattern this edge came from; `None` after a merge.
    pub arc: Option<Arc>,
    pub child: Node,
}

/// Rooted ordered tree with dotted edges and arrows `(tail, head)` between
/// edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTree {
    pub root: Node,
    pub arrows: Vec<(usize, usize)>,
    next_id: usize,
}

impl PlaneTree {
    pub fn empty() -> Self {
        PlaneTree {
            root: Node::default(),
            arrows: Vec::new(),
            next_id: 0,
        }
    }

    pub fn edge_count(&self) -> usize {
        fn count(n: &Node) -> usize {
            n.children.iter().map(|e| 1 + count(&e.child)).sum()
        }
        count(&self.root)
    }

    pub fn dotted_count(&self) -> usize {
        fn count(n: &Node) -> usize {
            n.children
                .iter()
                .map(|e| usize::from(e.dotted) + count(&e.child))
                .sum()
        }
        count(&self.root)
    }

    /// Child-index path from the root to the edge with this id.
    pub fn edge_path(&self, id: usize) -> Option<Vec<usize>> {
        fn go(n: &Node, id: usize, path: &mut Vec<usize>) -> bool {
            for (k, e) in n.children.iter().enumerate() {
                path.push(k);
                if e.id == id || go(&e.child, id, path) {
                    return true;
                }
                path.pop();
            }
            false
        }
        let mut path = Vec::new();
        go(&self.root, id, &mut path).then_some(path)
    }

    fn node_at(&self, path: &[usize]) -> &Node {
        path.iter().fold(&self.root, |n, &k| &n.children[k].child)
    }

    fn node_at_mut(&mut self, path: &[usize]) -> &mut Node {
        path.iter()
            .fold(&mut self.root, |n, &k| &mut n.children[k].child)
    }

    /// Bracket notation: `-` plain edge, `.` dotted edge, children in parentheses.
    pub fn to_bracket(&self) -> String {
        fn go(n: &Node, out: &mut String) {
            out.push('(');
            for e in &n.children {
                out.push(if e.dotted { '.' } else { '-' });
                go(&e.child, out);
            }
            out.push(')');
        }
        let mut s = String::new();
        go(&self.root, &mut s);
        s
    }

    pub fn to_json_value(&self) -> TreeJson {
        fn go(n: &Node) -> Vec<EdgeJson> {
            n.children
                .iter()
                .map(|e| EdgeJson {
                    dotted: e.dotted,
                    arc: e.arc.map(|a| (a.i, a.j)),
                    children: go(&e.child),
                })
                .collect()
        }
        TreeJson {
            children: go(&self.root),
            arrows: self
                .arrows
                .iter()
                .map(|&(t, h)| ArrowJson {
                    tail: self.edge_path(t).unwrap_or_default(),
                    head: self.edge_path(h).unwrap_or_default(),
                })
                .collect(),
        }
    }

    /// Graphviz `digraph`: vertices `v0, v1, ...` (root `v0`), dotted edges
    /// drawn dotted, arrows as red edges between the lower ends.
    pub fn to_dot(&self) -> String {
        fn go(n: &Node, me: usize, next: &mut usize, ends: &mut Vec<(usize, usize)>, s: &mut String) {
            for e in &n.children {
                *next += 1;
                let v = *next;
                ends.push((e.id, v));
                let label = e.arc.map(|a| format!("({},{})", a.i, a.j)).unwrap_or_default();
                let style = if e.dotted { "dotted" } else { "solid" };
                writeln!(s, "  v{me} -> v{v} [style={style}, label=\"{label}\"];").unwrap();
                go(&e.child, v, next, ends, s);
            }
        }
        let mut s = String::from("digraph tree {\n  node [shape=point];\n  v0;\n");
        let mut next = 0;
        let mut ends = Vec::new();
        go(&self.root, 0, &mut next, &mut ends, &mut s);
        let end_of = |id: usize| ends.iter().find(|e| e.0 == id).map(|e| e.1);
        for &(t, h) in &self.arrows {
            if let (Some(a), Some(b)) = (end_of(t), end_of(h)) {
                writeln!(s, "  v{a} -> v{b} [color=red, constraint=false];").unwrap();
            }
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeJson {
    pub dotted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arc: Option<(i32, i32)>,
    pub children: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrowJson {
    pub tail: Vec<usize>,
    pub head: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeJson {
    pub children: Vec<EdgeJson>,
    pub arrows: Vec<ArrowJson>,
}

impl Serialize for PlaneTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

/// The tree `A(λ)` of the extended link pattern of `lam`.
pub fn build_tree(lam: &PathWord) -> PlaneTree {
    let lp = link_pattern(lam);
    let id_of = |a: &Arc| lp.arcs.iter().position(|b| b == a).unwrap();

    fn parse(seq: &[i32], lp: &crate::linkflip::LinkPattern, id_of: &dyn Fn(&Arc) -> usize) -> Node {
        let mut node = Node::default();
        let mut i = 0;
        while i < seq.len() {
            let a = lp.arc_at(seq[i]).expect("every extended position is paired");
            debug_assert_eq!(a.i, seq[i]);
            let j = seq.iter().position(|&p| p == a.j).unwrap();
            if lp.letter(a.j) == Step::D {
                node.children.push(Edge {
                    id: id_of(&a),
                    dotted: a.dashed,
                    arc: Some(a),
                    child: parse(&seq[i + 1..j], lp, id_of),
                });
                i = j + 1;
            } else {
                let rest: Vec<i32> = seq[i + 1..j].iter().chain(&seq[j + 1..]).copied().collect();
                node.children.push(Edge {
                    id: id_of(&a),
                    dotted: true,
                    arc: Some(a),
                    child: parse(&rest, lp, id_of),
                });
                i = seq.len();
            }
        }
        node
    }

    let positions: Vec<i32> = lp.positions().collect();
    let root = parse(&positions, &lp, &id_of);
    let arrows = lp.arrows().iter().map(|(t, h)| (id_of(t), id_of(h))).collect();
    PlaneTree {
        root,
        arrows,
        next_id: lp.arcs.len(),
    }
}

/// Dotted flags top to bottom if the edge heads a chain.
fn chain_flags(e: &Edge) -> Option<Vec<bool>> {
    let mut flags = vec![e.dotted];
    let mut cur = e;
    loop {
        match cur.child.children.as_slice() {
            [] => return Some(flags),
            [next] => {
                flags.push(next.dotted);
                cur = next;
            }
            _ => return None,
        }
    }
}

fn trailing_plain(flags: &[bool]) -> usize {
    flags.iter().rev().take_while(|&&d| !d).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    PlainMerge,
    DottedMerge,
    ArrowMerge,
}

/// One applicable merge: children `k` and `k + 1` of the vertex at `path`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Move {
    pub path: Vec<usize>,
    pub k: usize,
    pub rule: Rule,
    pub factor: PolyQ,
    /// Dotted flags of the merged chain, top to bottom.
    pub merged: Vec<bool>,
}

fn merge_move(tree: &PlaneTree, path: &[usize], k: usize) -> Result<Option<Move>> {
    let node = tree.node_at(path);
    let (l, r) = (&node.children[k], &node.children[k + 1]);
    let (Some(fl), Some(fr)) = (chain_flags(l), chain_flags(r)) else {
        return Ok(None);
    };
    if fl.iter().any(|&d| d) {
        return Ok(None);
    }
    let (n, m) = (fl.len(), fr.len());
    let (ni, mi) = (n as i64, m as i64);
    let mv = if fr.iter().all(|&d| !d) {
        // Absorbing an arrow head here would lose its factor.
        if tree.arrows.iter().any(|&(_, h)| h == r.id) {
            return Ok(None);
        }
        Move {
            path: path.to_vec(),
            k,
            rule: Rule::PlainMerge,
            factor: q_binomial(ni + mi, mi)?,
            merged: vec![false; n + m],
        }
    } else if fr[0] {
        let t = trailing_plain(&fr);
        let d = n + m - t;
        let mut merged = vec![true];
        if d > 1 {
            merged.extend(std::iter::repeat_n(false, d - 2));
            merged.push(true);
        }
        merged.extend(std::iter::repeat_n(false, t));
        let base = &q2_binomial(ni + mi, mi)? * &one_plus_q_product(n);
        let (rule, factor) = if tree.arrows.contains(&(r.id, l.id)) {
            let num = &base * &q_int(2 * m + n);
            (Rule::ArrowMerge, num.exact_div(&q_int(2 * (m + n)))?)
        } else {
            (Rule::DottedMerge, base)
        };
        Move {
            path: path.to_vec(),
            k,
            rule,
            factor,
            merged,
        }
    } else {
        return Ok(None);
    };
    Ok(Some(mv))
}

/// Every merge applicable anywhere in the tree.
pub fn moves(tree: &PlaneTree) -> Result<Vec<Move>> {
    fn walk(tree: &PlaneTree, path: &mut Vec<usize>, out: &mut Vec<Move>) -> Result<()> {
        let len = tree.node_at(path).children.len();
        for k in 0..len.saturating_sub(1) {
            if let Some(m) = merge_move(tree, path, k)? {
                out.push(m);
            }
        }
        for k in 0..len {
            path.push(k);
            walk(tree, path, out)?;
            path.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    walk(tree, &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// The tree after `mv`. The merged chain keeps the left top edge's id, so
/// its outgoing arrow survives; arrows out of the right top edge or into the
/// left top edge are spent.
pub fn apply(tree: &PlaneTree, mv: &Move) -> PlaneTree {
    let mut out = tree.clone();
    let node = out.node_at(&mv.path);
    let left_top = node.children[mv.k].id;
    let right_top = node.children[mv.k + 1].id;

    let mut next_id = out.next_id;
    let mut chain = Node::default();
    for (depth, &dotted) in mv.merged.iter().enumerate().rev() {
        let id = if depth == 0 {
            left_top
        } else {
            next_id += 1;
            next_id - 1
        };
        chain = Node {
            children: vec![Edge {
                id,
                dotted,
                arc: None,
                child: chain,
            }],
        };
    }
    let merged = chain.children.pop().expect("merged chain is nonempty");
    let node = out.node_at_mut(&mv.path);
    node.children.splice(mv.k..mv.k + 2, [merged]);
    out.next_id = next_id;
    out.arrows.retain(|&(t, h)| t != right_top && h != left_top);
    out
}

/// Value of a tree that is a single chain (or empty): `∏_{i≤T}(1+q^i)` for
/// a trailing run of `T` plain edges.
pub fn terminal_value(tree: &PlaneTree) -> Option<PolyQ> {
    match tree.root.children.as_slice() {
        [] => Some(PolyQ::one()),
        [e] => chain_flags(e).map(|f| one_plus_q_product(trailing_plain(&f))),
        _ => None,
    }
}

fn check_arrows(tree: &PlaneTree) -> Result<()> {
    for &(t, h) in &tree.arrows {
        let (pt, ph) = (tree.edge_path(t), tree.edge_path(h));
        let same_parent = match (&pt, &ph) {
            (Some(a), Some(b)) => a[..a.len() - 1] == b[..b.len() - 1],
            _ => false,
        };
        if !same_parent {
            return Err(Error::StuckTree(format!(
                "arrow between edges with different parents in {}",
                tree.to_bracket()
            )));
        }
    }
    Ok(())
}

/// One step of ω: the rightmost merge at the deepest vertex.
pub fn canonical_move(tree: &PlaneTree) -> Result<Option<Move>> {
    Ok(moves(tree)?
        .into_iter()
        .max_by(|a, b| (a.path.len(), &a.path, a.k).cmp(&(b.path.len(), &b.path, b.k))))
}

/// `ω(tree)` with merges taken in canonical order.
pub fn omega(tree: &PlaneTree) -> Result<PolyQ> {
    check_arrows(tree)?;
    let mut acc = PolyQ::one();
    let mut t = tree.clone();
    while let Some(mv) = canonical_move(&t)? {
        acc = &acc * &mv.factor;
        t = apply(&t, &mv);
    }
    terminal_value(&t)
        .map(|v| &acc * &v)
        .ok_or_else(|| Error::StuckTree(t.to_bracket()))
}

/// Distinct values of ω over every merge order.
pub fn omega_all_orders(tree: &PlaneTree) -> Result<Vec<PolyQ>> {
    check_arrows(tree)?;
    let ms = moves(tree)?;
    if ms.is_empty() {
        return terminal_value(tree)
            .map(|v| vec![v])
            .ok_or_else(|| Error::StuckTree(tree.to_bracket()));
    }
    let mut out: Vec<PolyQ> = Vec::new();
    for mv in &ms {
        for v in omega_all_orders(&apply(tree, mv))? {
            let v = &mv.factor * &v;
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// Kenyon–Wilson hook formula `[n]! / ∏_chords [l(c)]`.
pub fn kw_type_a(lam: &PathWord) -> Result<PolyQ> {
    let chords = lam.chords()?;
    let den = PolyQ::product(&chords.iter().map(|c| q_int(c.length)).collect::<Vec<_>>());
    q_factorial(chords.len()).exact_div(&den)
}

/// `a_(j,N)` as (numerator, denominator).
pub fn a_factor(j: usize, n: usize) -> Result<(PolyQ, PolyQ)> {
    if j == 0 {
        return Err(Error::Domain("a-factor index starts at 1".into()));
    }
    let m = j.div_ceil(2);
    Ok(if j % 2 == 1 {
        (q_int(n + 2 * m), q_int(2 * m))
    } else {
        (q_int(2 * n + 2 * m), q_int(n + 2 * m))
    })
}

/// `Q^B(M,N) = ∏_{i≤N}(1+q^i) ∏_{j≤M} a_(j,N)`, divided once at the end.
pub fn q_b(m: usize, n: usize) -> Result<PolyQ> {
    let mut num = one_plus_q_product(n);
    let mut den = PolyQ::one();
    for j in 1..=m {
        let (a, b) = a_factor(j, n)?;
        num = &num * &a;
        den = &den * &b;
    }
    num.exact_div(&den)
}

/// `P(M,N) = Q^B(M-1,N)`, and `P(0,N) = 1`.
pub fn p_mn(m: usize, n: usize) -> Result<PolyQ> {
    match m {
        0 => Ok(PolyQ::one()),
        _ => q_b(m - 1, n),
    }
}

/// A product-formula evaluation, with the words whose factor had to be
/// enumerated because no closed form covers them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorized {
    pub value: PolyQ,
    pub enumerated: Vec<PathWord>,
}

fn is_ballot(w: &PathWord) -> bool {
    w.classify().is_ballot
}

fn factor_b(w: &PathWord, enumerated: &mut Vec<PathWord>) -> Result<PolyQ> {
    let steps = w.steps();
    let len = steps.len();
    let Some(&first) = steps.first() else {
        return Ok(PolyQ::one());
    };
    if first == Step::U {
        match w.prime_dyck_prefix_len() {
            None => return factor_b(&w.slice(1, len), enumerated),
            Some(k) => {
                let tail = w.slice(k, len);
                if is_ballot(&tail) {
                    let head = &kw_type_a(&w.slice(0, k))? * &q_b(len - k, k / 2)?;
                    return Ok(&head * &factor_b(&tail, enumerated)?);
                }
            }
        }
    } else {
        let a = steps.iter().take_while(|&&s| s == Step::D).count();
        let beta = w.slice(a, len);
        if is_ballot(&beta) {
            return Ok(&q_b(beta.len(), a)? * &factor_b(&beta, enumerated)?);
        }
    }
    enumerated.push(w.clone());
    genfun_lower(w, PathType::B, Statistic::Art)
}

/// `P^B_λ` by the prime-Dyck-prefix factorization. Splits that the closed
/// forms do not cover (a non-ballot remainder) are enumerated.
pub fn factorize_p_b(lam: &PathWord) -> Result<Factorized> {
    let mut enumerated = Vec::new();
    let value = factor_b(lam, &mut enumerated)?;
    Ok(Factorized { value, enumerated })
}

pub fn factorized_p_b(lam: &PathWord) -> Result<PolyQ> {
    factorize_p_b(lam).map(|f| f.value)
}

/// `P^D_λ = P^A_λ1 · P(M,N) · P^D_λ2` when `λ̃2` is ballot, and `P^B_λ̃`
/// otherwise.
pub fn factorize_p_d(lam: &PathWord) -> Result<Factorized> {
    let len = lam.len();
    if let Some(k) = lam.prime_dyck_prefix_len() {
        let tail = lam.slice(k, len);
        if k < len && is_ballot(&tail.truncate_last()?) {
            let head = &kw_type_a(&lam.slice(0, k))? * &p_mn(len - k, k / 2)?;
            let rest = factorize_p_d(&tail)?;
            return Ok(Factorized {
                value: &head * &rest.value,
                enumerated: rest.enumerated,
            });
        }
    }
    factorize_p_b(&lam.truncate_last()?)
}

pub fn factorized_p_d(lam: &PathWord) -> Result<PolyQ> {
    factorize_p_d(lam).map(|f| f.value)
}
