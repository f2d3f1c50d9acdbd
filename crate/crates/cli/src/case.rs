use std::fmt;
use std::str::FromStr;

/// One `--case` value: `n=N`, `n=N,p=P`, `k=K,p=P` or `p=P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Case {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub p: Option<u64>,
}

impl Case {
    pub fn p(p: u64) -> Self {
        Case { n: None, k: None, p: Some(p) }
    }
}

impl FromStr for Case {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut case = Case { n: None, k: None, p: None };
        for item in s.split(',') {
            let (key, value) = item.split_once('=').ok_or_else(|| format!("expected key=value, got `{item}`"))?;
            let value: u64 = value.trim().parse().map_err(|_| format!("`{value}` is not a nonnegative integer"))?;
            let slot = match key.trim() {
                "n" => &mut case.n,
                "k" => &mut case.k,
                "p" => {
                    if case.p.replace(value).is_some() {
                        return Err("p given twice".into());
                    }
                    continue;
                }
                other => return Err(format!("unknown key `{other}` (expected n, k or p)")),
            };
            if slot.replace(value as usize).is_some() {
                return Err(format!("{} given twice", key.trim()));
            }
        }
        if case.n.is_some() && case.k.is_some() {
            return Err("give either n or k, not both".into());
        }
        if case.k.is_some() && case.p.is_none() {
            return Err("k=K needs p=P".into());
        }
        if case.n == Some(0) || case.k == Some(0) {
            return Err("n and k must be positive".into());
        }
        Ok(case)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        f.write_str(&parts.join(","))
    }
}
