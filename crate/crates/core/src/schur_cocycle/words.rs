use std::collections::HashMap;
use std::collections::VecDeque;

use crate::groups::Permutation;

use super::CocycleError;

/// Largest degree for which reduced-word graphs are built.
pub const MAX_WORD_GRAPH_DEGREE: usize = 6;
/// Vertex cap for reduced-word graphs.
pub const MAX_WORD_GRAPH_VERTICES: usize = 1_000_000;

/// A word `(i_1, …, i_l)` in the simple transpositions, read as the product
/// `σ_{i_1} ∘ σ_{i_2} ∘ … ∘ σ_{i_l}`, together with that product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    letters: Vec<usize>,
    target: Permutation,
}

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn target(&self) -> &Permutation {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Position of each value: `pos[v] = σ⁻¹(v)`.
fn positions(images: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; images.len()];
    for (j, &v) in images.iter().enumerate() {
        pos[v] = j;
    }
    pos
}

/// `i` is a left descent of `σ` when `ℓ(σ_i ∘ σ) < ℓ(σ)`, i.e. when the value
/// `i` occurs before the value `i - 1` in the image list (0-based values).
pub fn is_left_descent(sigma: &Permutation, i: usize) -> bool {
    let pos = positions(sigma.images());
    pos[i] < pos[i - 1]
}

/// `i` is a right descent of `σ` when `ℓ(σ ∘ σ_i) < ℓ(σ)`.
pub fn is_right_descent(sigma: &Permutation, i: usize) -> bool {
    sigma.apply(i - 1) > sigma.apply(i)
}

/// The lexicographically smallest reduced word of `σ`, built by repeatedly
/// peeling off the smallest left descent.
pub fn canonical_reduced_word(sigma: &Permutation) -> ReducedWord {
    let mut images = sigma.images().to_vec();
    let mut pos = positions(&images);
    let n = images.len();
    let mut letters = Vec::with_capacity(sigma.inversions());
    'outer: loop {
        for i in 1..n {
            if pos[i] < pos[i - 1] {
                // σ ← σ_i ∘ σ swaps the values i-1 and i
                images.swap(pos[i], pos[i - 1]);
                pos.swap(i, i - 1);
                letters.push(i);
                continue 'outer;
            }
        }
        break;
    }
    ReducedWord { letters, target: sigma.clone() }
}

/// Evaluates a word `σ_{i_1} ∘ … ∘ σ_{i_l}` in `S_n`.
pub fn word_to_permutation(n: usize, letters: &[usize]) -> Permutation {
    let mut p = Permutation::identity(n);
    for &i in letters {
        p = p.compose(&Permutation::elementary(n, i));
    }
    p
}

/// Neighbours of a reduced word under braid moves, tagged with the sign each
/// move contributes: `+1` for a hexagonal move `i,i+1,i ↔ i+1,i,i+1`, `-1` for
/// a square move `i,j ↔ j,i` with `|i - j| ≥ 2`.
fn moves(word: &[u8]) -> Vec<(Vec<u8>, i8)> {
    let mut out = Vec::new();
    for a in 0..word.len().saturating_sub(1) {
        let (x, y) = (word[a], word[a + 1]);
        if x.abs_diff(y) >= 2 {
            let mut w = word.to_vec();
            w.swap(a, a + 1);
            out.push((w, -1));
        }
        if a + 2 < word.len() && word[a + 2] == x && x.abs_diff(y) == 1 {
            let mut w = word.to_vec();
            w[a] = y;
            w[a + 1] = x;
            w[a + 2] = y;
            out.push((w, 1));
        }
    }
    out
}

/// Every reduced word of `σ`, each labelled with `(-1)^(number of square
/// moves)` along some path from the canonical word. The boolean is `true` when
/// all paths agree.
pub struct WordGraph {
    labels: HashMap<Vec<u8>, i8>,
    consistent: bool,
    edges: usize,
}

impl WordGraph {
    pub fn build(sigma: &Permutation) -> Result<Self, CocycleError> {
        let degree = sigma.degree();
        if degree > MAX_WORD_GRAPH_DEGREE {
            return Err(CocycleError::GraphTooLarge { degree, cap: MAX_WORD_GRAPH_DEGREE });
        }
        let start: Vec<u8> = canonical_reduced_word(sigma).letters.iter().map(|&i| i as u8).collect();
        let mut labels = HashMap::new();
        labels.insert(start.clone(), 1i8);
        let mut queue = VecDeque::from([start]);
        let mut consistent = true;
        let mut edges = 0;
        while let Some(w) = queue.pop_front() {
            let lw = labels[&w];
            for (v, s) in moves(&w) {
                edges += 1;
                match labels.get(&v) {
                    Some(&lv) => consistent &= lv == lw * s,
                    None => {
                        if labels.len() >= MAX_WORD_GRAPH_VERTICES {
                            return Err(CocycleError::GraphTooLarge { degree, cap: MAX_WORD_GRAPH_DEGREE });
                        }
                        labels.insert(v.clone(), lw * s);
                        queue.push_back(v);
                    }
                }
            }
        }
        Ok(WordGraph { labels, consistent, edges: edges / 2 })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_consistent(&self) -> bool {
        self.consistent
    }

    /// Square-move parity of a reduced word relative to the canonical word.
    pub fn label(&self, letters: &[usize]) -> Option<i8> {
        let key: Vec<u8> = letters.iter().map(|&i| i as u8).collect();
        self.labels.get(&key).copied()
    }

    pub fn words(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.labels.keys().map(|w| w.iter().map(|&i| i as usize).collect())
    }
}

/// Propagates square-move parities over the reduced-word graph of `σ` and
/// reports whether they are consistent around every cycle.
pub fn square_move_parity_check(sigma: &Permutation) -> Result<bool, CocycleError> {
    Ok(WordGraph::build(sigma)?.is_consistent())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn longest(n: usize) -> Permutation {
        Permutation::from_images((0..n).rev().collect()).unwrap()
    }

    #[test]
    fn canonical_words() {
        assert!(canonical_reduced_word(&Permutation::identity(3)).is_empty());
        assert_eq!(canonical_reduced_word(&Permutation::elementary(3, 1)).letters(), &[1]);
        assert_eq!(canonical_reduced_word(&longest(3)).letters(), &[1, 2, 1]);
        assert_eq!(canonical_reduced_word(&longest(4)).letters(), &[1, 2, 1, 3, 2, 1]);
    }

    #[test]
    fn canonical_word_evaluates_back() {
        let p = Permutation::from_images(vec![3, 0, 4, 1, 2]).unwrap();
        let w = canonical_reduced_word(&p);
        assert_eq!(w.len(), p.inversions());
        assert_eq!(word_to_permutation(5, w.letters()), p);
    }

    #[test]
    fn descents() {
        let s1 = Permutation::elementary(3, 1);
        assert!(is_left_descent(&s1, 1));
        assert!(!is_left_descent(&s1, 2));
        assert!(is_right_descent(&s1, 1));
    }

    #[test]
    fn word_graph_of_longest_s4() {
        let g = WordGraph::build(&longest(4)).unwrap();
        assert_eq!(g.vertex_count(), 16);
        assert!(g.is_consistent());
        assert_eq!(g.label(&[1, 2, 1, 3, 2, 1]), Some(1));
    }

    #[test]
    fn degree_cap() {
        assert!(matches!(
            square_move_parity_check(&Permutation::identity(7)),
            Err(CocycleError::GraphTooLarge { .. })
        ));
    }
}
