use crate::error::{Error, Result};

/// Truncated integer power series `a_0 + a_1 t + … + a_N t^N`.
pub type IntSeries = Vec<i128>;

/// Coefficients of `1/(1 − p(t))` through `t^n`.
pub fn series_inverse_one_minus(p: &[i128], n: usize) -> Result<IntSeries> {
    if p.first().is_some_and(|&c| c != 0) {
        return Err(Error::NonzeroConstantTerm);
    }
    let mut a = vec![0i128; n + 1];
    a[0] = 1;
    for k in 1..=n {
        a[k] = (1..=k.min(p.len().saturating_sub(1))).map(|j| p[j] * a[k - j]).sum();
    }
    Ok(a)
}

pub fn factorial(n: usize) -> i128 {
    (1..=n as i128).product()
}

pub fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

pub fn catalan(n: usize) -> i128 {
    binomial(2 * n, n) / (n as i128 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn multiply_back(p: &[i128], a: &[i128]) -> Vec<i128> {
        (0..a.len())
            .map(|k| a[k] - (1..=k.min(p.len() - 1)).map(|j| p[j] * a[k - j]).sum::<i128>())
            .collect()
    }

    #[test]
    fn geometric_and_catalan() {
        assert_eq!(series_inverse_one_minus(&[0, 1], 4).unwrap(), vec![1, 1, 1, 1, 1]);
        let p = [0, 1, 1, 2, 5, 14];
        let a = series_inverse_one_minus(&p, 5).unwrap();
        assert_eq!(a, vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(multiply_back(&p, &a), vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(series_inverse_one_minus(&[0], 3).unwrap(), vec![1, 0, 0, 0]);
        assert!(matches!(series_inverse_one_minus(&[1, 1], 3), Err(Error::NonzeroConstantTerm)));
    }

    #[test]
    fn counting_functions() {
        assert_eq!((0..6).map(catalan).collect::<Vec<_>>(), vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(factorial(5), 120);
    }
}
