use crate::hypercore::Hypergraph;

use super::DecompError;

/// Checks that no two vertices lie together in more than one edge.
pub fn check_codegree(h: &Hypergraph) -> Result<(), DecompError> {
    let mut seen = std::collections::HashSet::new();
    for e in h.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                if !seen.insert((a, b)) {
                    return Err(DecompError::Codegree(a, b));
                }
            }
        }
    }
    Ok(())
}

/// Partitions the edges into matchings (edge indices per class).
///
/// Hint classes, when given, are taken as the first matchings after checking
/// they are disjoint matchings of `h`; the remaining edges are placed first-fit
/// in index order.
pub fn greedy_matching_decomposition(h: &Hypergraph, hint: Option<&[Vec<usize>]>) -> Result<Vec<Vec<usize>>, DecompError> {
    check_codegree(h)?;
    let n = h.vertex_count();
    let mut placed = vec![false; h.edge_count()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut covered: Vec<Vec<bool>> = Vec::new();
    for class in hint.unwrap_or(&[]) {
        let mut cov = vec![false; n];
        for &i in class {
            if i >= h.edge_count() || placed[i] {
                return Err(DecompError::BadHint(format!("edge {i} missing or repeated")));
            }
            for &v in h.edge(i) {
                if cov[v as usize] {
                    return Err(DecompError::BadHint(format!("class containing edge {i} is not a matching")));
                }
                cov[v as usize] = true;
            }
            placed[i] = true;
        }
        classes.push(class.clone());
        covered.push(cov);
    }
    for (i, _) in placed.iter().enumerate().filter(|(_, &p)| !p) {
        let e = h.edge(i);
        let slot = covered.iter().position(|cov| e.iter().all(|&v| !cov[v as usize]));
        let j = slot.unwrap_or_else(|| {
            classes.push(Vec::new());
            covered.push(vec![false; n]);
            classes.len() - 1
        });
        for &v in e {
            covered[j][v as usize] = true;
        }
        classes[j].push(i);
    }
    for c in &mut classes {
        c.sort_unstable();
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_edges_form_one_matching() {
        let h = Hypergraph::new(3, 6, [vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(greedy_matching_decomposition(&h, None).unwrap().len(), 1);
    }

    #[test]
    fn codegree_violation() {
        let h = Hypergraph::new(3, 4, [vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert!(matches!(greedy_matching_decomposition(&h, None), Err(DecompError::Codegree(0, 1))));
    }

    #[test]
    fn bad_hint_is_rejected() {
        let h = Hypergraph::new(3, 5, [vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert!(greedy_matching_decomposition(&h, Some(&[vec![0, 1]])).is_err());
        assert_eq!(greedy_matching_decomposition(&h, Some(&[vec![1]])).unwrap(), vec![vec![1], vec![0]]);
    }
}
