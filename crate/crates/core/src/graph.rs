//! Strongly connected components of small explicit graphs.

/// Component id per vertex. Components are numbered by their smallest vertex,
/// so the numbering depends only on the graph.
pub(crate) fn scc<F>(n: usize, succ: F) -> (Vec<usize>, usize)
where
    F: Fn(usize) -> Vec<usize>,
{
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![UNSET; n];
    let mut next_index = 0;
    let mut ncomp = 0;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        // iterative Tarjan: (vertex, successors, next successor position)
        let mut call: Vec<(usize, Vec<usize>, usize)> = Vec::new();
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, succ(root), 0));

        while let Some((v, succs, pos)) = call.last_mut() {
            let v = *v;
            if *pos < succs.len() {
                let w = succs[*pos];
                *pos += 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, succ(w), 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some((parent, _, _)) = call.last() {
                    low[*parent] = low[*parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }

    // renumber by smallest member
    let mut first = vec![UNSET; ncomp];
    for v in 0..n {
        if first[comp[v]] == UNSET {
            first[comp[v]] = v;
        }
    }
    let mut order: Vec<usize> = (0..ncomp).collect();
    order.sort_by_key(|&c| first[c]);
    let mut rename = vec![0; ncomp];
    for (new, &old) in order.iter().enumerate() {
        rename[old] = new;
    }
    (comp.into_iter().map(|c| rename[c]).collect(), ncomp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycles_and_a_tail() {
        // 0 <-> 1 -> 2 <-> 3, 4 alone
        let adj = [vec![1], vec![0, 2], vec![3], vec![2], vec![]];
        let (comp, n) = scc(5, |v| adj[v].clone());
        assert_eq!(n, 3);
        assert_eq!(comp, vec![0, 0, 1, 1, 2]);
    }
}
