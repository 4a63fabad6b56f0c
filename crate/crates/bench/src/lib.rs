//! Benchmark inputs shared by the criterion targets.

use primex::modrep::gl_group;
use primex::{LinearRepresentation, PermutationGroup};

/// `S_n` from a transposition and an `n`-cycle.
pub fn symmetric(n: usize) -> PermutationGroup {
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    PermutationGroup::from_images(n, &[&swap, &cycle]).expect("valid generators")
}

/// `GL(n, l)` in its natural representation.
pub fn general_linear(n: usize, l: u32) -> LinearRepresentation {
    let gl = gl_group(n, l).expect("prime l");
    primex::modrep::natural_representation(&gl, l, n).expect("linear generators")
}
