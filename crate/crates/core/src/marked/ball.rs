use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::MarkedError;
use crate::marked::MarkedGroup;
use crate::oracle::CanonicalKey;
use crate::word::{Letter, Word};

/// Closed ball of radius `radius` in the Cayley graph of a marked group.
///
/// Vertices are numbered in discovery order of a breadth-first search that
/// expands vertices in order and letters in letter order, so each
/// representative is the shortlex-least word of its element.
#[derive(Clone, Debug)]
pub struct BallGraph {
    pub radius: usize,
    pub reps: Vec<Word>,
    pub keys: Vec<CanonicalKey>,
    pub depth: Vec<usize>,
    /// `transitions[v][l.index()]`: target of the edge from `v` labelled
    /// `l`, `None` when the target is outside the ball.
    pub transitions: Vec<Vec<Option<usize>>>,
}

/// The abstract labelled shape of a ball: no keys, no words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BallSignature {
    pub radius: usize,
    pub vertices: usize,
    /// Per vertex, per signed letter: target index or `-1` for outside.
    pub transitions: Vec<Vec<i64>>,
}

/// Exported ball: the signature fields plus geodesic representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallExport {
    pub radius: usize,
    pub vertices: usize,
    pub reps: Vec<String>,
    pub transitions: Vec<Vec<i64>>,
}

impl BallGraph {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn signature(&self) -> BallSignature {
        BallSignature { radius: self.radius, vertices: self.len(), transitions: encode(&self.transitions) }
    }

    pub fn export(&self, group: &MarkedGroup) -> BallExport {
        BallExport {
            radius: self.radius,
            vertices: self.len(),
            reps: self.reps.iter().map(|w| group.alphabet().format_word(w)).collect(),
            transitions: encode(&self.transitions),
        }
    }
}

fn encode(t: &[Vec<Option<usize>>]) -> Vec<Vec<i64>> {
    t.iter().map(|row| row.iter().map(|x| x.map_or(-1, |v| v as i64)).collect()).collect()
}

/// Incremental shortlex breadth-first enumeration of a marked group's
/// balls, one radius at a time.
pub struct BallExplorer<'a> {
    group: &'a MarkedGroup,
    cap: usize,
    radius: usize,
    reps: Vec<Word>,
    keys: Vec<CanonicalKey>,
    depth: Vec<usize>,
    /// `layer_end[r]` = number of vertices of depth `≤ r`.
    layer_end: Vec<usize>,
    /// Key of `rep · letter` for every vertex and letter.
    edge_keys: Vec<Vec<CanonicalKey>>,
    index: HashMap<CanonicalKey, usize>,
}

impl<'a> BallExplorer<'a> {
    /// Starts at the radius-0 ball `{1}`.
    pub fn new(group: &'a MarkedGroup, cap: usize) -> Result<BallExplorer<'a>, MarkedError> {
        if cap == 0 {
            return Err(MarkedError::CapExceeded { cap, partial: 0 });
        }
        let mut e = BallExplorer {
            group,
            cap,
            radius: 0,
            reps: Vec::new(),
            keys: Vec::new(),
            depth: Vec::new(),
            layer_end: Vec::new(),
            edge_keys: Vec::new(),
            index: HashMap::new(),
        };
        e.add_vertex(Word::empty(), group.identity_key(), 0);
        e.layer_end.push(1);
        e.compute_edge_keys(0);
        Ok(e)
    }

    fn add_vertex(&mut self, rep: Word, key: CanonicalKey, depth: usize) {
        self.index.insert(key.clone(), self.reps.len());
        self.reps.push(rep);
        self.keys.push(key);
        self.depth.push(depth);
    }

    fn compute_edge_keys(&mut self, from: usize) {
        let arity = self.group.arity();
        for v in from..self.reps.len() {
            let keys = Letter::all(arity)
                .map(|l| {
                    let mut w = self.reps[v].clone();
                    w.push(l);
                    self.group.key(&w)
                })
                .collect();
            self.edge_keys.push(keys);
        }
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn group(&self) -> &MarkedGroup {
        self.group
    }

    /// Number of vertices of depth `≤ r` (`r` at most the current radius).
    pub fn size_at(&self, r: usize) -> usize {
        self.layer_end[r]
    }

    pub fn reps(&self) -> &[Word] {
        &self.reps
    }

    pub fn keys(&self) -> &[CanonicalKey] {
        &self.keys
    }

    /// Extends the ball by one layer.
    pub fn grow(&mut self) -> Result<(), MarkedError> {
        let start = if self.radius == 0 { 0 } else { self.layer_end[self.radius - 1] };
        let frontier = start..self.reps.len();
        let first_new = self.reps.len();
        for v in frontier {
            for (li, l) in Letter::all(self.group.arity()).enumerate() {
                let key = &self.edge_keys[v][li];
                if self.index.contains_key(key) {
                    continue;
                }
                if self.reps.len() >= self.cap {
                    return Err(MarkedError::CapExceeded { cap: self.cap, partial: self.reps.len() });
                }
                let mut rep = self.reps[v].clone();
                rep.push(l);
                let key = key.clone();
                self.add_vertex(rep, key, self.radius + 1);
            }
        }
        self.radius += 1;
        self.layer_end.push(self.reps.len());
        self.compute_edge_keys(first_new);
        Ok(())
    }

    pub fn grow_to(&mut self, r: usize) -> Result<(), MarkedError> {
        while self.radius < r {
            self.grow()?;
        }
        Ok(())
    }

    fn target(&self, v: usize, li: usize, r: usize) -> Option<usize> {
        self.index.get(&self.edge_keys[v][li]).copied().filter(|&t| self.depth[t] <= r)
    }

    /// Transition table of the radius-`r` sub-ball.
    pub fn transitions_at(&self, r: usize) -> Vec<Vec<Option<usize>>> {
        let n = self.layer_end[r];
        let letters = 2 * self.group.arity();
        (0..n).map(|v| (0..letters).map(|li| self.target(v, li, r)).collect()).collect()
    }

    pub fn signature_at(&self, r: usize) -> BallSignature {
        BallSignature { radius: r, vertices: self.layer_end[r], transitions: encode(&self.transitions_at(r)) }
    }

    pub fn graph_at(&self, r: usize) -> BallGraph {
        let n = self.layer_end[r];
        BallGraph {
            radius: r,
            reps: self.reps[..n].to_vec(),
            keys: self.keys[..n].to_vec(),
            depth: self.depth[..n].to_vec(),
            transitions: self.transitions_at(r),
        }
    }
}

/// The closed radius-`r` ball, refusing to hold more than `cap` vertices.
pub fn ball(m: &MarkedGroup, r: usize, cap: usize) -> Result<BallGraph, MarkedError> {
    let mut e = BallExplorer::new(m, cap)?;
    e.grow_to(r)?;
    Ok(e.graph_at(r))
}

pub fn ball_signature(m: &MarkedGroup, r: usize, cap: usize) -> Result<BallSignature, MarkedError> {
    let mut e = BallExplorer::new(m, cap)?;
    e.grow_to(r)?;
    Ok(e.signature_at(r))
}

/// Ball sizes for radii `0..=max_r`.
pub fn growth(m: &MarkedGroup, max_r: usize, cap: usize) -> Result<Vec<usize>, MarkedError> {
    let mut e = BallExplorer::new(m, cap)?;
    e.grow_to(max_r)?;
    Ok((0..=max_r).map(|r| e.size_at(r)).collect())
}
