//! Residual state of a graph relative to a chosen vertex set: the
//! white/blue/red coloring, white-degrees, the two integer potentials, move
//! scoring, blue class profiles, and the white-subgraph component report.

use crate::graph::Graph;
use std::fmt;

/// Ordered so that legal recoloring only ever increases the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Color {
    White,
    Blue,
    Red,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum SchemeId {
    D5,
    D4,
}

impl SchemeId {
    pub fn as_str(&self) -> &'static str {
        match self {
            SchemeId::D5 => "d5",
            SchemeId::D4 => "d4",
        }
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Weight table and move threshold for one degree floor. Blue weights are
/// indexed by white-degree class, the top class absorbing all larger
/// white-degrees.
#[derive(Debug, Clone, Copy)]
pub struct WeightScheme {
    pub id: SchemeId,
    pub degree_floor: usize,
    pub white_weight: i64,
    blue_weights: &'static [i64],
    pub threshold: i64,
    pub charge_unit: i64,
}

static D5: WeightScheme = WeightScheme {
    id: SchemeId::D5,
    degree_floor: 5,
    white_weight: 35,
    blue_weights: &[14, 17, 19, 21, 23],
    threshold: 105,
    charge_unit: 6,
};

static D4: WeightScheme = WeightScheme {
    id: SchemeId::D4,
    degree_floor: 4,
    white_weight: 16,
    blue_weights: &[7, 8, 9, 10],
    threshold: 44,
    charge_unit: 1,
};

impl WeightScheme {
    pub fn d5() -> &'static WeightScheme {
        &D5
    }

    pub fn d4() -> &'static WeightScheme {
        &D4
    }

    pub fn by_id(id: SchemeId) -> &'static WeightScheme {
        match id {
            SchemeId::D5 => &D5,
            SchemeId::D4 => &D4,
        }
    }

    /// Highest blue class; larger white-degrees are capped into it.
    pub fn top_class(&self) -> usize {
        self.blue_weights.len()
    }

    pub fn blue_class(&self, white_degree: usize) -> usize {
        white_degree.min(self.top_class())
    }

    /// Weight of a blue vertex with the given white-degree (>= 1).
    pub fn blue_weight(&self, white_degree: usize) -> i64 {
        debug_assert!(white_degree >= 1);
        self.blue_weights[self.blue_class(white_degree) - 1]
    }

    /// `floor(white_weight * n / threshold)`, the guaranteed output size.
    pub fn theorem_bound(&self, n: usize) -> usize {
        (self.white_weight as usize * n) / self.threshold as usize
    }

    /// Cycle lengths the move system leaves for the terminal step.
    pub fn allowed_cycles(&self) -> &'static [usize] {
        match self.id {
            SchemeId::D5 => &[4, 5, 7, 10],
            SchemeId::D4 => &[4, 7],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResidualError {
    VertexOutOfRange { id: usize, n: usize },
    ExtendIntoChosen { id: usize },
    EmptyExtension,
    DegreeBelowFloor { floor: usize, min_degree: usize },
}

impl fmt::Display for ResidualError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidualError::VertexOutOfRange { id, n } => {
                write!(f, "vertex id {id} out of range for graph on {n} vertices")
            }
            ResidualError::ExtendIntoChosen { id } => {
                write!(f, "vertex {id} is already in the chosen set")
            }
            ResidualError::EmptyExtension => write!(f, "extension set is empty"),
            ResidualError::DegreeBelowFloor { floor, min_degree } => {
                write!(
                    f,
                    "scheme needs minimum degree {floor}, graph has {min_degree}"
                )
            }
        }
    }
}

impl std::error::Error for ResidualError {}

/// Coloring of a graph relative to a chosen set, with white-degrees.
/// Immutable; `extend` returns a new value.
#[derive(Clone)]
pub struct ResidualGraph<'g> {
    base: &'g Graph,
    chosen: Vec<usize>,
    color: Vec<Color>,
    white_degree: Vec<usize>,
}

pub fn build_residual<'g>(
    g: &'g Graph,
    chosen: &[usize],
) -> Result<ResidualGraph<'g>, ResidualError> {
    let n = g.vertex_count();
    let mut in_chosen = vec![false; n];
    for &v in chosen {
        if v >= n {
            return Err(ResidualError::VertexOutOfRange { id: v, n });
        }
        in_chosen[v] = true;
    }
    let mut dominated = vec![false; n];
    for v in 0..n {
        if in_chosen[v] {
            dominated[v] = true;
            for &u in g.neighbors(v) {
                dominated[u] = true;
            }
        }
    }
    let mut color = vec![Color::White; n];
    for v in 0..n {
        color[v] = if !dominated[v] {
            Color::White
        } else if g.neighbors(v).iter().any(|&u| !dominated[u]) {
            Color::Blue
        } else {
            Color::Red
        };
    }
    let white_degree: Vec<usize> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| color[u] == Color::White)
                .count()
        })
        .collect();
    let mut chosen: Vec<usize> = (0..n).filter(|&v| in_chosen[v]).collect();
    chosen.sort_unstable();
    Ok(ResidualGraph {
        base: g,
        chosen,
        color,
        white_degree,
    })
}

impl<'g> ResidualGraph<'g> {
    pub fn base(&self) -> &'g Graph {
        self.base
    }

    /// The chosen set, sorted ascending.
    pub fn chosen(&self) -> &[usize] {
        &self.chosen
    }

    pub fn color(&self, v: usize) -> Color {
        self.color[v]
    }

    pub fn white_degree(&self, v: usize) -> usize {
        self.white_degree[v]
    }

    /// For a white vertex every neighbor is white or blue, so this is exact.
    pub fn blue_degree(&self, v: usize) -> usize {
        self.base.degree(v) - self.white_degree[v]
    }

    pub fn whites(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.color.len()).filter(move |&v| self.color[v] == Color::White)
    }

    pub fn blues(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.color.len()).filter(move |&v| self.color[v] == Color::Blue)
    }

    /// No white vertex is equivalent to everything red: a blue without a
    /// white neighbor would already be red.
    pub fn is_dominating(&self) -> bool {
        self.color.iter().all(|&c| c == Color::Red)
    }

    /// White neighbors of `v`, ascending.
    pub fn white_neighbors(&self, v: usize) -> Vec<usize> {
        self.base
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.color[u] == Color::White)
            .collect()
    }

    /// Rebuilds the residual for `chosen + addition`. Colors can only move
    /// forward along white -> blue -> red, which is asserted.
    pub fn extend(&self, addition: &[usize]) -> Result<ResidualGraph<'g>, ResidualError> {
        if addition.is_empty() {
            return Err(ResidualError::EmptyExtension);
        }
        let n = self.base.vertex_count();
        for &v in addition {
            if v >= n {
                return Err(ResidualError::VertexOutOfRange { id: v, n });
            }
            if self.chosen.binary_search(&v).is_ok() {
                return Err(ResidualError::ExtendIntoChosen { id: v });
            }
        }
        let mut all: Vec<usize> = self.chosen.iter().copied().chain(addition.iter().copied()).collect();
        all.sort_unstable();
        all.dedup();
        let next = build_residual(self.base, &all)?;
        for v in 0..n {
            assert!(
                next.color[v] >= self.color[v],
                "color of vertex {v} moved backwards"
            );
        }
        Ok(next)
    }
}

/// Weighted white/blue count; zero exactly when the chosen set dominates.
pub fn potential(r: &ResidualGraph<'_>, s: &WeightScheme) -> Result<i64, ResidualError> {
    let g = r.base();
    if g.vertex_count() > 0 && g.min_degree() < s.degree_floor {
        return Err(ResidualError::DegreeBelowFloor {
            floor: s.degree_floor,
            min_degree: g.min_degree(),
        });
    }
    let mut total = 0i64;
    for v in 0..g.vertex_count() {
        match r.color(v) {
            Color::White => total += s.white_weight,
            Color::Blue => total += s.blue_weight(r.white_degree(v)),
            Color::Red => {}
        }
    }
    Ok(total)
}

/// Potential drop caused by extending the chosen set with `addition`.
/// The empty set scores zero.
pub fn score_move(
    r: &ResidualGraph<'_>,
    addition: &[usize],
    s: &WeightScheme,
) -> Result<i64, ResidualError> {
    if addition.is_empty() {
        return Ok(0);
    }
    let before = potential(r, s)?;
    let after = potential(&r.extend(addition)?, s)?;
    debug_assert!(after <= before);
    Ok(before - after)
}

/// Blue vertices grouped by capped white-degree class, plus the specials:
/// class-2 blues adjacent to an isolated white.
#[derive(Debug, Clone)]
pub struct BlueProfile {
    /// `class_members[c-1]` holds the class-`c` blues, ascending.
    pub class_members: Vec<Vec<usize>>,
    pub special_set: Vec<usize>,
}

pub fn blue_profile(r: &ResidualGraph<'_>, s: &WeightScheme) -> BlueProfile {
    let mut class_members = vec![Vec::new(); s.top_class()];
    let mut special_set = Vec::new();
    for v in r.blues() {
        let class = s.blue_class(r.white_degree(v));
        class_members[class - 1].push(v);
        if class == 2
            && r.white_degree(v) == 2
            && r.white_neighbors(v)
                .iter()
                .any(|&u| r.white_degree(u) == 0)
        {
            special_set.push(v);
        }
    }
    BlueProfile {
        class_members,
        special_set,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ComponentKind {
    Path,
    Cycle,
    General,
}

#[derive(Debug, Clone)]
pub struct WhiteComponent {
    /// Canonical order: paths run from the smaller-id endpoint, cycles start
    /// at their smallest id and head toward its smaller neighbor, general
    /// components are sorted.
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
}

impl WhiteComponent {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn min_id(&self) -> usize {
        *self.vertices.iter().min().expect("components are nonempty")
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ComponentCounts {
    pub p1: usize,
    pub p2: usize,
    pub c4: usize,
    pub c5: usize,
    pub c7: usize,
    pub c10: usize,
    pub other_paths: usize,
    pub other_cycles: usize,
    pub general: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WClass {
    W0,
    W1,
    W2,
    W3Plus,
}

#[derive(Debug, Clone)]
pub struct WhiteComponentReport {
    /// Ordered by smallest member id.
    pub components: Vec<WhiteComponent>,
    pub counts: ComponentCounts,
    /// Indexed by vertex id; `None` for non-white vertices.
    pub w_class: Vec<Option<WClass>>,
}

pub fn white_components(r: &ResidualGraph<'_>) -> WhiteComponentReport {
    let n = r.base().vertex_count();
    let mut w_class: Vec<Option<WClass>> = vec![None; n];
    for v in r.whites() {
        w_class[v] = Some(match r.white_degree(v) {
            0 => WClass::W0,
            1 => WClass::W1,
            2 => WClass::W2,
            _ => WClass::W3Plus,
        });
    }

    let mut visited = vec![false; n];
    let mut components = Vec::new();
    for start in r.whites() {
        if visited[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut members = Vec::new();
        visited[start] = true;
        while let Some(v) = stack.pop() {
            members.push(v);
            for u in r.white_neighbors(v) {
                if !visited[u] {
                    visited[u] = true;
                    stack.push(u);
                }
            }
        }
        members.sort_unstable();
        components.push(canonical_component(r, members));
    }
    components.sort_by_key(WhiteComponent::min_id);

    let mut counts = ComponentCounts::default();
    for c in &components {
        match (c.kind, c.len()) {
            (ComponentKind::Path, 1) => counts.p1 += 1,
            (ComponentKind::Path, 2) => counts.p2 += 1,
            (ComponentKind::Path, _) => counts.other_paths += 1,
            (ComponentKind::Cycle, 4) => counts.c4 += 1,
            (ComponentKind::Cycle, 5) => counts.c5 += 1,
            (ComponentKind::Cycle, 7) => counts.c7 += 1,
            (ComponentKind::Cycle, 10) => counts.c10 += 1,
            (ComponentKind::Cycle, _) => counts.other_cycles += 1,
            (ComponentKind::General, _) => counts.general += 1,
        }
    }

    WhiteComponentReport {
        components,
        counts,
        w_class,
    }
}

fn canonical_component(r: &ResidualGraph<'_>, members: Vec<usize>) -> WhiteComponent {
    let degree_within = |v: usize| r.white_degree(v);
    if members.iter().any(|&v| degree_within(v) > 2) {
        return WhiteComponent {
            vertices: members,
            kind: ComponentKind::General,
        };
    }
    let endpoints: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&v| degree_within(v) <= 1)
        .collect();
    if endpoints.is_empty() {
        // cycle: start at the smallest id, head toward its smaller neighbor
        let start = members[0];
        let nbrs = r.white_neighbors(start);
        let seq = walk(r, start, nbrs[0], members.len());
        WhiteComponent {
            vertices: seq,
            kind: ComponentKind::Cycle,
        }
    } else {
        let start = *endpoints.iter().min().unwrap();
        let seq = if members.len() == 1 {
            vec![start]
        } else {
            let next = r.white_neighbors(start)[0];
            walk(r, start, next, members.len())
        };
        WhiteComponent {
            vertices: seq,
            kind: ComponentKind::Path,
        }
    }
}

fn walk(r: &ResidualGraph<'_>, start: usize, second: usize, len: usize) -> Vec<usize> {
    let mut seq = vec![start, second];
    while seq.len() < len {
        let v = *seq.last().unwrap();
        let prev = seq[seq.len() - 2];
        let next = r
            .white_neighbors(v)
            .into_iter()
            .find(|&u| u != prev)
            .expect("interior vertices of a path or cycle have a second neighbor");
        seq.push(next);
    }
    seq
}
