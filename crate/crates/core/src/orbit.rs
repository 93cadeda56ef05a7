use crate::perm::Permutation;

/// Whether the group generated by `generators` acts transitively on
/// `{1..n}`. Generators are bijections, so the orbit of letter 1 is closed
/// under their inverses as well and it is enough to count what it reaches.
pub fn orbit_is_full(generators: &[&Permutation], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    debug_assert!(generators.iter().all(|g| g.size() == n));
    let mut seen = vec![false; n];
    let mut stack = vec![0u32];
    seen[0] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for g in generators {
            let y = g.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    reached == n
}
