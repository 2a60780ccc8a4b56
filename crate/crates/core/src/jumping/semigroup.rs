use crate::error::{Error, Result};

/// Elements `<= bound` of the additive monoid generated by `gens`, ascending.
pub fn semigroup_members(gens: &[u64], bound: u64) -> Result<Vec<u64>> {
    let useful: Vec<u64> = gens
        .iter()
        .copied()
        .filter(|&g| g > 0 && g <= bound)
        .collect();
    if bound > 0 && gens.iter().all(|&g| g == 0) {
        return Err(Error::DegenerateSemigroup);
    }
    let size = usize::try_from(bound).map_err(|_| Error::Overflow)? + 1;
    let mut reachable = vec![false; size];
    reachable[0] = true;
    for k in 1..size {
        reachable[k] = useful
            .iter()
            .any(|&g| g as usize <= k && reachable[k - g as usize]);
    }
    Ok(reachable
        .iter()
        .enumerate()
        .filter(|(_, &r)| r)
        .map(|(k, _)| k as u64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_semigroups() {
        assert_eq!(
            semigroup_members(&[2, 9], 12).unwrap(),
            vec![0, 2, 4, 6, 8, 9, 10, 11, 12]
        );
        assert_eq!(semigroup_members(&[1], 5).unwrap(), vec![0, 1, 2, 3, 4, 5]);
        let m = semigroup_members(&[3, 11, 19], 20).unwrap();
        assert!(!m.contains(&16));
        assert_eq!(m, vec![0, 3, 6, 9, 11, 12, 14, 15, 17, 18, 19, 20]);
        assert_eq!(semigroup_members(&[0, 4], 9).unwrap(), vec![0, 4, 8]);
        assert_eq!(semigroup_members(&[0], 0).unwrap(), vec![0]);
        assert_eq!(
            semigroup_members(&[0, 0], 3),
            Err(Error::DegenerateSemigroup)
        );
    }
}
