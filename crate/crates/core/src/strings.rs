//! Strings, bands, hooks and the hook/cohook moves.
//!
//! A [`StringWord`] may be held in either orientation; [`StringWord::canonical`]
//! picks the smaller of `w` and `w⁻¹` under the letter order
//! (arrow name, then direct before inverse). Sets of strings always hold
//! canonical words.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::quiver::{ArrowId, BoundQuiver, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: ArrowId,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: ArrowId) -> Letter {
        Letter { arrow, inverse: false }
    }

    pub fn inv(arrow: ArrowId) -> Letter {
        Letter { arrow, inverse: true }
    }

    pub fn inverted(self) -> Letter {
        Letter { arrow: self.arrow, inverse: !self.inverse }
    }

    pub fn source(self, q: &BoundQuiver) -> VertexId {
        if self.inverse {
            q.target(self.arrow)
        } else {
            q.source(self.arrow)
        }
    }

    pub fn target(self, q: &BoundQuiver) -> VertexId {
        if self.inverse {
            q.source(self.arrow)
        } else {
            q.target(self.arrow)
        }
    }

    pub fn name(self, q: &BoundQuiver) -> String {
        if self.inverse {
            format!("~{}", q.arrow_name(self.arrow))
        } else {
            q.arrow_name(self.arrow).to_string()
        }
    }
}

/// Whether `l` followed by `r` may appear in a string.
pub fn pair_ok(q: &BoundQuiver, l: Letter, r: Letter) -> bool {
    if l.target(q) != r.source(q) {
        return false;
    }
    match (l.inverse, r.inverse) {
        (false, false) => !q.is_relation(l.arrow, r.arrow),
        (true, true) => !q.is_relation(r.arrow, l.arrow),
        _ => l.arrow != r.arrow,
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StringError {
    #[error("letters {position} and {next} do not compose", next = .position + 1)]
    EndpointMismatch { position: usize },
    #[error("letters {position} and {next} cancel", next = .position + 1)]
    NotReduced { position: usize },
    #[error("letters {position} and {next} form a relation", next = .position + 1)]
    HitsRelation { position: usize },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("empty word")]
    Empty,
    #[error("the algebra has a band, e.g. {0}")]
    HasBand(String),
    #[error("the algebra is infinite dimensional")]
    InfiniteDimensional,
}

/// A string: `Trivial(v)` or a nonempty valid walk.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StringWord {
    Trivial(VertexId),
    Word(Vec<Letter>),
}

impl Ord for StringWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| match (self, other) {
            (StringWord::Trivial(a), StringWord::Trivial(b)) => a.cmp(b),
            (StringWord::Word(a), StringWord::Word(b)) => a.cmp(b),
            _ => unreachable!("lengths already differ"),
        })
    }
}

impl PartialOrd for StringWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl StringWord {
    /// Builds a string from a walk that is already known to be valid.
    pub fn from_walk(start: VertexId, letters: Vec<Letter>) -> StringWord {
        if letters.is_empty() {
            StringWord::Trivial(start)
        } else {
            StringWord::Word(letters)
        }
    }

    pub fn len(&self) -> usize {
        self.letters().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, StringWord::Trivial(_))
    }

    pub fn letters(&self) -> &[Letter] {
        match self {
            StringWord::Trivial(_) => &[],
            StringWord::Word(l) => l,
        }
    }

    pub fn start(&self, q: &BoundQuiver) -> VertexId {
        match self {
            StringWord::Trivial(v) => *v,
            StringWord::Word(l) => l[0].source(q),
        }
    }

    pub fn end(&self, q: &BoundQuiver) -> VertexId {
        match self {
            StringWord::Trivial(v) => *v,
            StringWord::Word(l) => l[l.len() - 1].target(q),
        }
    }

    /// Vertex labels of the nodes `0..=len` of the coefficient quiver.
    pub fn nodes(&self, q: &BoundQuiver) -> Vec<VertexId> {
        let mut out = vec![self.start(q)];
        out.extend(self.letters().iter().map(|l| l.target(q)));
        out
    }

    pub fn inverse(&self) -> StringWord {
        match self {
            StringWord::Trivial(v) => StringWord::Trivial(*v),
            StringWord::Word(l) => StringWord::Word(l.iter().rev().map(|x| x.inverted()).collect()),
        }
    }

    pub fn canonical(&self) -> StringWord {
        match self {
            StringWord::Trivial(_) => self.clone(),
            StringWord::Word(_) => {
                let inv = self.inverse();
                if inv < *self {
                    inv
                } else {
                    self.clone()
                }
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Both orientations; a trivial string has only one.
    pub fn orientations(&self) -> Vec<StringWord> {
        if self.is_trivial() {
            vec![self.clone()]
        } else {
            vec![self.clone(), self.inverse()]
        }
    }

    /// All letters direct. Trivial strings are both direct and inverse.
    pub fn is_direct(&self) -> bool {
        self.letters().iter().all(|l| !l.inverse)
    }

    pub fn is_inverse(&self) -> bool {
        self.letters().iter().all(|l| l.inverse)
    }

    pub fn display<'a>(&'a self, q: &'a BoundQuiver) -> WordDisplay<'a> {
        WordDisplay { q, w: self }
    }
}

pub struct WordDisplay<'a> {
    q: &'a BoundQuiver,
    w: &'a StringWord,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.w {
            StringWord::Trivial(v) => write!(f, "@{}", self.q.vertex_name(*v)),
            StringWord::Word(l) => f.write_str(&format_letters(self.q, l)),
        }
    }
}

pub fn format_letters(q: &BoundQuiver, letters: &[Letter]) -> String {
    let parts: Vec<String> = letters.iter().map(|x| x.name(q)).collect();
    parts.join(" ")
}

/// Checks a walk and returns its canonical string.
pub fn make_string(q: &BoundQuiver, letters: &[Letter]) -> Result<StringWord, StringError> {
    if letters.is_empty() {
        return Err(StringError::Empty);
    }
    for (k, pair) in letters.windows(2).enumerate() {
        let (l, r) = (pair[0], pair[1]);
        let position = k + 1;
        if l.target(q) != r.source(q) {
            return Err(StringError::EndpointMismatch { position });
        }
        if l.arrow == r.arrow && l.inverse != r.inverse {
            return Err(StringError::NotReduced { position });
        }
        if !pair_ok(q, l, r) {
            return Err(StringError::HitsRelation { position });
        }
    }
    Ok(StringWord::Word(letters.to_vec()).canonical())
}

/// Parses `"a ~b c"` (`~` marks an inverse letter) or `"@v"` for a
/// trivial string. Returns the walk as written, not canonicalized.
pub fn parse_walk(q: &BoundQuiver, text: &str) -> Result<StringWord, StringError> {
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    parse_tokens(q, &tokens)
}

pub fn parse_tokens<S: AsRef<str>>(q: &BoundQuiver, tokens: &[S]) -> Result<StringWord, StringError> {
    match tokens {
        [] => Err(StringError::Empty),
        [one] if one.as_ref().starts_with('@') => {
            let name = &one.as_ref()[1..];
            q.vertex_id(name)
                .map(StringWord::Trivial)
                .map_err(|_| StringError::UnknownVertex(name.to_string()))
        }
        _ => {
            let mut letters = Vec::with_capacity(tokens.len());
            for t in tokens {
                let t = t.as_ref();
                let (name, inverse) = if let Some(rest) = t.strip_prefix('~') {
                    (rest, true)
                } else if let Some(rest) = t.strip_suffix("^-1") {
                    (rest, true)
                } else {
                    (t, false)
                };
                let arrow = q
                    .arrow_id(name)
                    .map_err(|_| StringError::UnknownArrow(name.to_string()))?;
                letters.push(Letter { arrow, inverse });
            }
            let canonical = make_string(q, &letters)?;
            debug_assert!(!canonical.is_trivial());
            Ok(StringWord::Word(letters))
        }
    }
}

/// Parses and canonicalizes.
pub fn parse_word(q: &BoundQuiver, text: &str) -> Result<StringWord, StringError> {
    parse_walk(q, text).map(|w| w.canonical())
}

/// All canonical strings of length at most `max_len`, sorted.
pub fn enumerate_strings(q: &BoundQuiver, max_len: usize) -> BTreeSet<StringWord> {
    let mut out: BTreeSet<StringWord> = (0..q.vertex_count()).map(StringWord::Trivial).collect();
    if max_len == 0 {
        return out;
    }
    let mut stack: Vec<Vec<Letter>> = all_letters(q).map(|l| vec![l]).collect();
    while let Some(walk) = stack.pop() {
        if walk.len() < max_len {
            let last = *walk.last().unwrap();
            for l in all_letters(q) {
                if pair_ok(q, last, l) {
                    let mut next = walk.clone();
                    next.push(l);
                    stack.push(next);
                }
            }
        }
        out.insert(StringWord::Word(walk).canonical());
    }
    out
}

/// Every string of a band-free finite-dimensional algebra.
pub fn all_strings(q: &BoundQuiver) -> Result<BTreeSet<StringWord>, StringError> {
    if !q.is_finite_dimensional() {
        return Err(StringError::InfiniteDimensional);
    }
    if let Some(b) = detect_bands(q) {
        return Err(StringError::HasBand(b.display(q)));
    }
    // Without bands no string repeats a letter, so 2|Q1| bounds the length.
    Ok(enumerate_strings(q, 2 * q.arrow_count()))
}

pub fn longest_string_len(q: &BoundQuiver) -> Result<usize, StringError> {
    Ok(all_strings(q)?.iter().map(|w| w.len()).max().unwrap_or(0))
}

fn all_letters(q: &BoundQuiver) -> impl Iterator<Item = Letter> + '_ {
    (0..q.arrow_count()).flat_map(|a| [Letter::direct(a), Letter::inv(a)])
}

/// A primitive cyclic string containing direct and inverse letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandWord {
    pub letters: Vec<Letter>,
}

impl BandWord {
    pub fn display(&self, q: &BoundQuiver) -> String {
        format_letters(q, &self.letters)
    }

    /// Canonical representative under rotation and inversion.
    fn canonical(letters: &[Letter]) -> BandWord {
        let n = letters.len();
        let inv: Vec<Letter> = letters.iter().rev().map(|l| l.inverted()).collect();
        let mut best: Option<Vec<Letter>> = None;
        for base in [letters, &inv[..]] {
            for r in 0..n {
                let rot: Vec<Letter> = base[r..].iter().chain(&base[..r]).copied().collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        BandWord { letters: best.unwrap_or_default() }
    }
}


fn index_letter(i: usize) -> Letter {
    Letter { arrow: i / 2, inverse: i % 2 == 1 }
}

/// A band if one exists.
pub fn detect_bands(q: &BoundQuiver) -> Option<BandWord> {
    let n = 2 * q.arrow_count();
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| pair_ok(q, index_letter(i), index_letter(j)))
                .collect()
        })
        .collect();
    let bfs = |from: usize| -> Vec<Option<usize>> {
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &succ[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        // parent[from] stays None; mark reachability separately.
        parent
            .into_iter()
            .enumerate()
            .map(|(i, p)| if i == from { Some(from) } else { p })
            .collect()
    };
    let path = |parent: &[Option<usize>], from: usize, to: usize| -> Vec<usize> {
        let mut out = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur].unwrap();
            out.push(cur);
        }
        out.reverse();
        out
    };
    let trees: Vec<Vec<Option<usize>>> = (0..n).map(bfs).collect();
    for d in (0..n).step_by(2) {
        for i in (1..n).step_by(2) {
            // Closed walk d -> ... -> i -> ... -> d through both kinds of letter.
            if trees[d][i].is_none() || trees[i][d].is_none() {
                continue;
            }
            let mut cycle = path(&trees[d], d, i);
            cycle.pop();
            let mut back = path(&trees[i], i, d);
            back.pop();
            cycle.extend(back);
            let letters: Vec<Letter> = cycle.into_iter().map(index_letter).collect();
            return Some(BandWord::canonical(primitive_root(&letters)));
        }
    }
    None
}

fn primitive_root(letters: &[Letter]) -> &[Letter] {
    let n = letters.len();
    for p in 1..=n {
        if n.is_multiple_of(p) && (p..n).all(|k| letters[k] == letters[k - p]) {
            return &letters[..p];
        }
    }
    letters
}

/// `a` followed by its nonzero continuations as far as they go.
pub fn right_maximal_from(q: &BoundQuiver, a: ArrowId) -> Vec<Letter> {
    let mut out = vec![Letter::direct(a)];
    let mut cur = a;
    while let Some(b) = q.successor(cur) {
        if out.len() > q.arrow_count() {
            break; // relation-free cycle; only reachable in infinite dimension
        }
        out.push(Letter::direct(b));
        cur = b;
    }
    out
}

/// The nonzero direct path ending in `a`, extended to the left as far as possible.
pub fn left_maximal_to(q: &BoundQuiver, a: ArrowId) -> Vec<Letter> {
    let mut out = vec![Letter::direct(a)];
    let mut cur = a;
    while let Some(b) = q.predecessor(cur) {
        if out.len() > q.arrow_count() {
            break;
        }
        out.push(Letter::direct(b));
        cur = b;
    }
    out.reverse();
    out
}

/// Oriented direct string starting at `s(a)`.
pub fn hook(q: &BoundQuiver, a: ArrowId) -> StringWord {
    let x = q.source(a);
    match q.out_arrows(x).iter().find(|&&b| b != a) {
        Some(&other) => StringWord::Word(right_maximal_from(q, other)),
        None => StringWord::Trivial(x),
    }
}

/// Oriented direct string ending at `t(a)`.
pub fn cohook(q: &BoundQuiver, a: ArrowId) -> StringWord {
    let y = q.target(a);
    match q.in_arrows(y).iter().find(|&&b| b != a) {
        Some(&other) => StringWord::Word(left_maximal_to(q, other)),
        None => StringWord::Trivial(y),
    }
}

/// Nontrivial direct strings that are both left and right maximal.
pub fn maximal_direct_strings(q: &BoundQuiver) -> BTreeSet<StringWord> {
    (0..q.arrow_count())
        .filter(|&a| q.predecessor(a).is_none())
        .map(|a| StringWord::Word(right_maximal_from(q, a)).canonical())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// Side of every half-edge at `v`, as `(arrow, incoming, side)`.
///
/// Two half-edges that can sit on opposite ends of a node of some string get
/// different sides. Components are seeded in (arrow name, incoming first)
/// order with `Left`.
pub fn vertex_sides(q: &BoundQuiver, v: VertexId) -> Vec<(ArrowId, bool, Side)> {
    let mut half: Vec<(ArrowId, bool)> = q
        .in_arrows(v)
        .iter()
        .map(|&a| (a, true))
        .chain(q.out_arrows(v).iter().map(|&a| (a, false)))
        .collect();
    half.sort_by_key(|&(a, incoming)| (a, !incoming));
    let letter = |(a, incoming): (ArrowId, bool)| {
        // The letter ending at v that uses this half-edge.
        if incoming {
            Letter::direct(a)
        } else {
            Letter::inv(a)
        }
    };
    let conflict = |x: (ArrowId, bool), y: (ArrowId, bool)| {
        // x on the left of the node, y on the right.
        pair_ok(q, letter(x), letter(y).inverted())
    };
    let mut side: Vec<Option<Side>> = vec![None; half.len()];
    for seed in 0..half.len() {
        if side[seed].is_some() {
            continue;
        }
        side[seed] = Some(Side::Left);
        let mut stack = vec![seed];
        while let Some(i) = stack.pop() {
            let s = side[i].unwrap();
            let other = if s == Side::Left { Side::Right } else { Side::Left };
            for j in 0..half.len() {
                if j != i && side[j].is_none() && (conflict(half[i], half[j]) || conflict(half[j], half[i])) {
                    side[j] = Some(other);
                    stack.push(j);
                }
            }
        }
    }
    half.into_iter()
        .zip(side)
        .map(|((a, incoming), s)| (a, incoming, s.unwrap()))
        .collect()
}

fn side_arrow(q: &BoundQuiver, v: VertexId, incoming: bool, side: Side) -> Option<ArrowId> {
    vertex_sides(q, v)
        .into_iter()
        .find(|&(_, inc, s)| inc == incoming && s == side)
        .map(|(a, _, _)| a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StepKind {
    AddHookLeft,
    AddHookRight,
    RemoveCohookLeft,
    RemoveCohookRight,
    Zero,
}

/// One irreducible map. For outgoing steps `result` is the target; for
/// incoming steps it is the source. `None` only for `Zero`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrreducibleStep {
    pub kind: StepKind,
    pub arrow: Option<ArrowId>,
    pub result: Option<StringWord>,
}

impl IrreducibleStep {
    fn zero() -> Self {
        IrreducibleStep { kind: StepKind::Zero, arrow: None, result: None }
    }
}

fn concat(parts: &[&[Letter]]) -> Vec<Letter> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn inverse_letters(l: &[Letter]) -> Vec<Letter> {
    l.iter().rev().map(|x| x.inverted()).collect()
}

/// The left-hand move on the oriented word `w`; `side` is used only for
/// trivial `w`. Returns (kind-is-add-hook, arrow, result) or `None` for zero.
fn left_move(q: &BoundQuiver, w: &StringWord, side: Side) -> Option<(bool, ArrowId, StringWord)> {
    let s = w.start(q);
    let attach = match w {
        StringWord::Trivial(v) => side_arrow(q, *v, true, side),
        StringWord::Word(l) => q
            .in_arrows(s)
            .iter()
            .copied()
            .find(|&a| pair_ok(q, Letter::direct(a), l[0])),
    };
    if let Some(a) = attach {
        let h = hook(q, a);
        let letters = concat(&[&inverse_letters(h.letters()), &[Letter::direct(a)], w.letters()]);
        return Some((true, a, StringWord::Word(letters)));
    }
    if w.is_direct() {
        return None;
    }
    let l = w.letters();
    let k = l.iter().position(|x| x.inverse).unwrap();
    let b = l[k].arrow;
    debug_assert_eq!(&l[..k], cohook(q, b).letters());
    Some((false, b, StringWord::from_walk(q.source(b), l[k + 1..].to_vec())))
}

/// Inverse of [`left_move`]: the word whose left move produces `w`.
fn left_preimage(q: &BoundQuiver, w: &StringWord, side: Side) -> Option<(bool, ArrowId, StringWord)> {
    let s = w.start(q);
    let attach = match w {
        StringWord::Trivial(v) => side_arrow(q, *v, false, side),
        StringWord::Word(l) => q
            .out_arrows(s)
            .iter()
            .copied()
            .find(|&b| pair_ok(q, Letter::inv(b), l[0])),
    };
    if let Some(b) = attach {
        let c = cohook(q, b);
        let letters = concat(&[c.letters(), &[Letter::inv(b)], w.letters()]);
        return Some((false, b, StringWord::Word(letters)));
    }
    if w.is_inverse() {
        return None;
    }
    let l = w.letters();
    let k = l.iter().position(|x| !x.inverse).unwrap();
    let a = l[k].arrow;
    debug_assert_eq!(inverse_letters(&l[..k]), hook(q, a).letters());
    Some((true, a, StringWord::from_walk(q.target(a), l[k + 1..].to_vec())))
}

fn to_step(m: Option<(bool, ArrowId, StringWord)>, left: bool) -> IrreducibleStep {
    match m {
        None => IrreducibleStep::zero(),
        Some((add, a, w)) => IrreducibleStep {
            kind: match (add, left) {
                (true, true) => StepKind::AddHookLeft,
                (true, false) => StepKind::AddHookRight,
                (false, true) => StepKind::RemoveCohookLeft,
                (false, false) => StepKind::RemoveCohookRight,
            },
            arrow: Some(a),
            result: Some(w.canonical()),
        },
    }
}

/// The irreducible map out of `M(w)` changing the left end of `w`.
pub fn step_left(q: &BoundQuiver, w: &StringWord) -> IrreducibleStep {
    to_step(left_move(q, w, Side::Left), true)
}

/// The irreducible map out of `M(w)` changing the right end of `w`.
pub fn step_right(q: &BoundQuiver, w: &StringWord) -> IrreducibleStep {
    to_step(left_move(q, &w.inverse(), Side::Right), false)
}

/// The irreducible map into `M(w)` whose source differs from `w` on the left.
pub fn incoming_left(q: &BoundQuiver, w: &StringWord) -> IrreducibleStep {
    to_step(left_preimage(q, w, Side::Left), true)
}

pub fn incoming_right(q: &BoundQuiver, w: &StringWord) -> IrreducibleStep {
    to_step(left_preimage(q, &w.inverse(), Side::Right), false)
}

/// Subwalk placement inside a host word: nodes `first..=last` of the host,
/// read backwards when `reversed`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Placement {
    pub first: usize,
    pub last: usize,
    pub reversed: bool,
}

impl Placement {
    /// Host node of node `k` of the factor.
    pub fn host_node(&self, k: usize) -> usize {
        if self.reversed {
            self.last - k
        } else {
            self.first + k
        }
    }
}

fn occurrences(
    q: &BoundQuiver,
    w: &StringWord,
    u: &StringWord,
    accept: impl Fn(Option<Letter>, Option<Letter>) -> bool,
) -> Vec<Placement> {
    let wl = w.letters();
    let nodes = w.nodes(q);
    let len = u.len();
    let mut out = Vec::new();
    for (idx, uo) in u.orientations().iter().enumerate() {
        if len > wl.len() {
            break;
        }
        for i in 0..=wl.len() - len {
            let j = i + len;
            let matches = match uo {
                StringWord::Trivial(v) => nodes[i] == *v,
                StringWord::Word(ul) => wl[i..j] == ul[..],
            };
            let before = if i == 0 { None } else { Some(wl[i - 1]) };
            let after = wl.get(j).copied();
            if matches && accept(before, after) {
                out.push(Placement { first: i, last: j, reversed: idx == 1 });
            }
        }
    }
    out.sort();
    out
}

/// Placements of `u` in `w` whose nodes form a predecessor-closed set:
/// the factor strings of `w` that are quotients of `M(w)`.
pub fn upset_occurrences(q: &BoundQuiver, w: &StringWord, u: &StringWord) -> Vec<Placement> {
    occurrences(q, w, u, |before, after| {
        before.is_none_or(|l| l.inverse) && after.is_none_or(|l| !l.inverse)
    })
}

/// Placements whose nodes form a successor-closed set: submodules of `M(w)`.
pub fn downset_occurrences(q: &BoundQuiver, w: &StringWord, u: &StringWord) -> Vec<Placement> {
    occurrences(q, w, u, |before, after| {
        before.is_none_or(|l| !l.inverse) && after.is_none_or(|l| l.inverse)
    })
}
