//! Built-in Steiner triple systems.

use super::DesignInput;

pub fn fixture_names() -> [&'static str; 2] {
    ["sts7", "sts9"]
}

/// `sts7`: the Fano plane. `sts9`: lines of the affine plane of order 3,
/// with its four parallel classes as the resolution.
pub fn fixture(name: &str) -> Option<DesignInput> {
    match name {
        "sts7" => Some(DesignInput {
            n: 7,
            clique_order: 3,
            cliques: vec![
                vec![0, 1, 3],
                vec![1, 2, 4],
                vec![2, 3, 5],
                vec![3, 4, 6],
                vec![0, 4, 5],
                vec![1, 5, 6],
                vec![0, 2, 6],
            ],
            resolution: None,
        }),
        "sts9" => Some(DesignInput {
            n: 9,
            clique_order: 3,
            cliques: vec![
                vec![0, 1, 2],
                vec![3, 4, 5],
                vec![6, 7, 8],
                vec![0, 3, 6],
                vec![1, 4, 7],
                vec![2, 5, 8],
                vec![0, 4, 8],
                vec![1, 5, 6],
                vec![2, 3, 7],
                vec![0, 5, 7],
                vec![1, 3, 8],
                vec![2, 4, 6],
            ],
            resolution: Some(vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8], vec![9, 10, 11]]),
        }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        for name in fixture_names() {
            fixture(name).unwrap().validate(2).unwrap();
        }
        assert!(fixture("sts13").is_none());
    }
}
