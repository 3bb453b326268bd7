//! Seeded generation of small weakly reversible networks for the
//! randomized property suites: up to 3 species, up to 5 distinct
//! complexes with exponents at most 2, every component a directed cycle.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::network::{Edge, Network};

const SPECIES_NAMES: [&str; 3] = ["A", "B", "C"];

/// One random weakly reversible network drawn from the generator state.
pub fn random_weakly_reversible<R: Rng>(rng: &mut R) -> Network {
    let s = rng.gen_range(1..=3usize);
    let pool_size = 3usize.pow(s as u32);
    let n = rng.gen_range(1..=pool_size.min(5));

    // all exponent vectors over {0,1,2}^s, sampled without replacement
    let mut pool: Vec<Vec<u32>> = (0..pool_size)
        .map(|code| {
            let mut v = Vec::with_capacity(s);
            let mut c = code;
            for _ in 0..s {
                v.push((c % 3) as u32);
                c /= 3;
            }
            v
        })
        .collect();
    pool.shuffle(rng);
    let vertices: Vec<Vec<u32>> = pool.into_iter().take(n).collect();

    // partition: l nonempty blocks over a shuffled vertex list
    let l = rng.gen_range(1..=n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); l];
    for (pos, &v) in order.iter().enumerate() {
        if pos < l {
            blocks[pos].push(v);
        } else {
            let b = rng.gen_range(0..l);
            blocks[b].push(v);
        }
    }

    // each block with at least two vertices becomes a directed cycle
    let mut edges = Vec::new();
    for block in &mut blocks {
        block.shuffle(rng);
        if block.len() >= 2 {
            for i in 0..block.len() {
                edges.push(Edge {
                    from: block[i],
                    to: block[(i + 1) % block.len()],
                    label: None,
                });
            }
        }
    }

    let species = SPECIES_NAMES[..s].iter().map(|&x| x.to_string()).collect();
    Network::new(species, vertices, edges).expect("generator invariants hold")
}

/// A reproducible corpus of `count` networks from `seed`.
pub fn corpus(count: usize, seed: u64) -> Vec<Network> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_weakly_reversible(&mut rng)).collect()
}

/// A random absent intra-component edge of the network, if any block
/// with at least two vertices has room for one.
pub fn random_missing_intra_edge<R: Rng>(net: &Network, rng: &mut R) -> Option<(usize, usize)> {
    let missing = crate::analysis::missing_intra_component_edges(net);
    missing.choose(rng).copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible_and_weakly_reversible() {
        let a = corpus(25, 7);
        let b = corpus(25, 7);
        assert_eq!(a, b);
        for net in &a {
            assert!(net.is_weakly_reversible());
            assert!(net.num_species() <= 3);
            assert!(net.num_vertices() <= 5);
            assert!(net
                .vertices()
                .iter()
                .all(|v| v.iter().all(|&e| e <= 2)));
        }
    }

    #[test]
    fn different_seeds_differ() {
        assert_ne!(corpus(10, 1), corpus(10, 2));
    }

    #[test]
    fn missing_edge_is_intra_component() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for net in corpus(20, 11) {
            if let Some((i, j)) = random_missing_intra_edge(&net, &mut rng) {
                let comp = net.component_of();
                assert_eq!(comp[i], comp[j]);
                assert_ne!(i, j);
            }
        }
    }
}
