//! Permutations of `{1..n}`, explicit finite subgroups of `S_n`, subgroup
//! enumeration, cosets, transitivity, and the invariants `delta` (largest
//! reciprocal index of a proper subgroup) and `gamma` (largest reciprocal
//! index of an intransitive subgroup).

use num_rational::Rational64;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Cap on the order of groups produced by closure.
pub const GENERATE_ORDER_CAP: usize = 5040; // 7!
/// Cap on |G| for exhaustive subgroup enumeration.
pub const SUBGROUP_ENUM_CAP: usize = 120;

/// A permutation of `{1..n}`, stored 0-based: `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Parse("images are not a permutation".into()));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Build from 1-based cycles, e.g. `&[vec![1,2,3], vec![4,5]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for window in 0..cycle.len() {
                let a = cycle[window];
                let b = cycle[(window + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::Parse(format!(
                        "cycle point out of range 1..={n}"
                    )));
                }
                if images[a - 1] != a - 1 {
                    return Err(Error::Parse(format!("point {a} appears twice")));
                }
                images[a - 1] = b - 1;
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    /// Multiset of cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = vec![];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn is_even(&self) -> bool {
        let n = self.degree();
        let cycles = self.cycle_type().len();
        (n - cycles).is_multiple_of(2)
    }

    /// Cycle notation with 1-based points; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut cur = start;
            let mut first = true;
            while !seen[cur] {
                seen[cur] = true;
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&(cur + 1).to_string());
                cur = self.images[cur];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

/// A subgroup of `S_n` with its full element set (sorted, canonical).
#[derive(Clone, PartialEq, Eq)]
pub struct PermGroup {
    n: usize,
    elements: Vec<Perm>,
    generators: Vec<Perm>,
}

impl PermGroup {
    pub fn trivial(n: usize) -> Self {
        PermGroup {
            n,
            elements: vec![Perm::identity(n)],
            generators: vec![],
        }
    }

    /// Closure of the generators under composition, capped at 7!.
    pub fn generate(n: usize, generators: Vec<Perm>) -> Result<Self> {
        for g in &generators {
            if g.degree() != n {
                return Err(Error::Domain(format!(
                    "generator degree {} does not match n = {n}",
                    g.degree()
                )));
            }
        }
        let mut set: BTreeSet<Perm> = BTreeSet::new();
        set.insert(Perm::identity(n));
        let mut queue: Vec<Perm> = vec![Perm::identity(n)];
        while let Some(x) = queue.pop() {
            for g in &generators {
                let y = g.compose(&x);
                if set.insert(y.clone()) {
                    if set.len() > GENERATE_ORDER_CAP {
                        return Err(Error::CapExceeded(format!(
                            "group order exceeds the cap {GENERATE_ORDER_CAP}"
                        )));
                    }
                    queue.push(y);
                }
            }
        }
        Ok(PermGroup {
            n,
            elements: set.into_iter().collect(),
            generators,
        })
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = vec![];
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[vec![1, 2]]).unwrap());
        }
        if n >= 3 {
            gens.push(Perm::from_cycles(n, &[(1..=n).collect()]).unwrap());
        }
        Self::generate(n, gens).expect("symmetric group within cap")
    }

    pub fn alternating(n: usize) -> Self {
        let mut gens = vec![];
        if n >= 3 {
            gens.push(Perm::from_cycles(n, &[vec![1, 2, 3]]).unwrap());
        }
        if n >= 4 {
            let long: Vec<usize> = if n % 2 == 1 {
                (1..=n).collect()
            } else {
                (2..=n).collect()
            };
            gens.push(Perm::from_cycles(n, &[long]).unwrap());
        }
        Self::generate(n, gens).expect("alternating group within cap")
    }

    pub fn cyclic(n: usize) -> Self {
        let gen = Perm::from_cycles(n, &[(1..=n).collect()]).unwrap();
        Self::generate(n, vec![gen]).expect("cyclic group within cap")
    }

    /// Dihedral group acting on `n` points (order `2n`).
    pub fn dihedral(n: usize) -> Self {
        let rot = Perm::from_cycles(n, &[(1..=n).collect()]).unwrap();
        // reflection fixing point 1
        let images: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        let refl = Perm::from_images(images).unwrap();
        Self::generate(n, vec![rot, refl]).expect("dihedral group within cap")
    }

    /// The Frobenius group of order 20 on 5 points.
    pub fn frobenius20() -> Self {
        let a = Perm::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap();
        let b = Perm::from_cycles(5, &[vec![2, 3, 5, 4]]).unwrap();
        Self::generate(5, vec![a, b]).expect("F20 within cap")
    }

    /// The Klein four-group in its transitive action on 4 points.
    pub fn klein4() -> Self {
        let a = Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        let b = Perm::from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap();
        Self::generate(4, vec![a, b]).expect("V4 within cap")
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.n == other.n && self.elements.iter().all(|e| other.contains(e))
    }

    /// True iff the orbit of point 1 is all of `{1..n}`.
    pub fn is_transitive(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.orbit_of(0).len() == self.n
    }

    fn orbit_of(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[point] = true;
        let mut queue = vec![point];
        let mut orbit = vec![point];
        while let Some(x) = queue.pop() {
            for e in &self.elements {
                let y = e.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    queue.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbit sizes, sorted descending.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut sizes = vec![];
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let orbit = self.orbit_of(start);
            for &x in &orbit {
                seen[x] = true;
            }
            sizes.push(orbit.len());
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// Left coset representatives for `ambient/self`: the lexicographic
    /// minimum of each coset, sorted. Exactly `|ambient|/|self|` entries.
    pub fn coset_reps(ambient: &PermGroup, k: &PermGroup) -> Result<Vec<Perm>> {
        if !k.is_subgroup_of(ambient) {
            return Err(Error::Domain("K is not a subgroup of the ambient group".into()));
        }
        let mut reps: Vec<Perm> = vec![];
        let mut assigned: BTreeSet<Perm> = BTreeSet::new();
        for sigma in &ambient.elements {
            if assigned.contains(sigma) {
                continue;
            }
            // sigma is the lex-min of its coset because elements are sorted
            reps.push(sigma.clone());
            for tau in &k.elements {
                assigned.insert(sigma.compose(tau));
            }
        }
        debug_assert_eq!(reps.len(), ambient.order() / k.order());
        Ok(reps)
    }

    /// Every subgroup exactly once (by element-set identity), built by
    /// closing cyclic seeds under single-element extensions.
    pub fn all_subgroups(&self) -> Result<Vec<PermGroup>> {
        if self.order() > SUBGROUP_ENUM_CAP {
            return Err(Error::CapExceeded(format!(
                "subgroup enumeration capped at order {SUBGROUP_ENUM_CAP}, group has {}",
                self.order()
            )));
        }
        let mut found: BTreeSet<Vec<Perm>> = BTreeSet::new();
        let trivial = PermGroup::trivial(self.n);
        found.insert(trivial.elements.clone());
        let mut queue: Vec<PermGroup> = vec![trivial];
        let mut out: Vec<PermGroup> = vec![];
        while let Some(h) = queue.pop() {
            for g in &self.elements {
                if h.contains(g) {
                    continue;
                }
                let mut gens = h.generators.clone();
                gens.push(g.clone());
                let extended = PermGroup::generate(self.n, gens)?;
                if extended.order() <= self.order()
                    && extended.is_subgroup_of(self)
                    && found.insert(extended.elements.clone())
                {
                    queue.push(extended);
                }
            }
            out.push(h);
        }
        out.sort_by_key(|g| (g.order(), g.elements.to_vec()));
        Ok(out)
    }

    /// `max |K|/|G|` over proper subgroups; `None` for the trivial group.
    pub fn delta(&self) -> Result<Option<Rational64>> {
        if self.order() < 2 {
            return Ok(None);
        }
        let mut best = Rational64::new(0, 1);
        for k in self.all_subgroups()? {
            if k.order() < self.order() {
                let v = Rational64::new(k.order() as i64, self.order() as i64);
                if v > best {
                    best = v;
                }
            }
        }
        Ok(Some(best))
    }

    /// `max |K|/|G|` over intransitive subgroups (the trivial subgroup is
    /// intransitive for `n >= 2`, so the maximum exists).
    pub fn gamma(&self) -> Result<Rational64> {
        if self.n < 2 {
            return Err(Error::Domain(
                "gamma requires an action on at least 2 points".into(),
            ));
        }
        let mut best = Rational64::new(0, 1);
        for k in self.all_subgroups()? {
            if !k.is_transitive() {
                let v = Rational64::new(k.order() as i64, self.order() as i64);
                if v > best {
                    best = v;
                }
            }
        }
        Ok(best)
    }

    pub fn conjugate_by(&self, sigma: &Perm) -> PermGroup {
        let inv = sigma.inverse();
        let mut elements: Vec<Perm> = self
            .elements
            .iter()
            .map(|e| sigma.compose(e).compose(&inv))
            .collect();
        elements.sort();
        let generators = self
            .generators
            .iter()
            .map(|g| sigma.compose(g).compose(&inv))
            .collect();
        PermGroup {
            n: self.n,
            elements,
            generators,
        }
    }

    /// Multiset of cycle types over all elements, as sorted (type, count) pairs.
    pub fn cycle_type_census(&self) -> Vec<(Vec<usize>, usize)> {
        let mut map: std::collections::BTreeMap<Vec<usize>, usize> = Default::default();
        for e in &self.elements {
            *map.entry(e.cycle_type()).or_insert(0) += 1;
        }
        map.into_iter().collect()
    }

    pub fn has_cycle_type(&self, t: &[usize]) -> bool {
        self.elements.iter().any(|e| e.cycle_type() == t)
    }

    pub fn is_even_group(&self) -> bool {
        self.elements.iter().all(|e| e.is_even())
    }

    fn same_fingerprint(&self, other: &PermGroup) -> bool {
        self.n == other.n
            && self.order() == other.order()
            && self.orbit_sizes() == other.orbit_sizes()
            && self.cycle_type_census() == other.cycle_type_census()
    }

    /// Conjugacy in the full symmetric group: exists `s` with `s self s^-1 = other`.
    pub fn is_conjugate_to(&self, other: &PermGroup) -> bool {
        if !self.same_fingerprint(other) {
            return false;
        }
        if self.elements == other.elements {
            return true;
        }
        for sigma in PermGroup::symmetric(self.n).elements() {
            if self.conjugate_by(sigma).elements == other.elements {
                return true;
            }
        }
        false
    }

    /// Exists `s` in `S_n` with `s self s^-1 <= other`.
    pub fn embeds_up_to_conjugacy(&self, other: &PermGroup) -> bool {
        if self.n != other.n || !other.order().is_multiple_of(self.order()) {
            return false;
        }
        if self.is_subgroup_of(other) {
            return true;
        }
        for sigma in PermGroup::symmetric(self.n).elements() {
            if self.conjugate_by(sigma).is_subgroup_of(other) {
                return true;
            }
        }
        false
    }

    /// Human-readable structure name from order, degree, and cycle data.
    pub fn describe(&self) -> String {
        let order = self.order();
        let n = self.n;
        if order == 1 {
            return "trivial".into();
        }
        if self.is_transitive() {
            let name = match (n, order) {
                (2, 2) => Some("S2"),
                (3, 3) => Some("C3"),
                (3, 6) => Some("S3"),
                (4, 4) => {
                    if self.has_cycle_type(&[4]) {
                        Some("C4")
                    } else {
                        Some("V4")
                    }
                }
                (4, 8) => Some("D4"),
                (4, 12) => Some("A4"),
                (4, 24) => Some("S4"),
                (5, 5) => Some("C5"),
                (5, 10) => Some("D5"),
                (5, 20) => Some("F20"),
                (5, 60) => Some("A5"),
                (5, 120) => Some("S5"),
                (6, 720) => Some("S6"),
                (6, 360) => Some("A6"),
                (7, 5040) => Some("S7"),
                _ => None,
            };
            if let Some(s) = name {
                return s.to_string();
            }
            if order == n && self.has_cycle_type(&[n]) {
                return format!("C{n}");
            }
            if order == 2 * n && n > 2 {
                return format!("D{n}");
            }
            return format!("transitive group of order {order} on {n} points");
        }
        let orbits = self.orbit_sizes();
        let orbit_str = orbits
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("+");
        let abstract_name = match order {
            2 => "C2".to_string(),
            3 => "C3".to_string(),
            4 => {
                if self.elements.iter().any(|e| {
                    let t = e.cycle_type();
                    t.first() == Some(&4)
                }) {
                    "C4".to_string()
                } else {
                    "C2xC2".to_string()
                }
            }
            6 => {
                if self.cycle_type_census().len() <= 3 && self.is_abelian() {
                    "C6".to_string()
                } else {
                    "S3".to_string()
                }
            }
            12 => "S3xC2".to_string(),
            o => format!("order-{o} group"),
        };
        format!("{abstract_name} (orbits {orbit_str})")
    }

    pub fn is_abelian(&self) -> bool {
        for a in &self.elements {
            for b in &self.elements {
                if a.compose(b) != b.compose(a) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(n={}, order={}, gens={:?})",
            self.n,
            self.order(),
            self.generators
        )
    }
}

/// Parse cycle notation such as `(1 2 3)(4 5)` (commas also allowed inside
/// cycles); `()`, `id`, and `e` denote the identity.
pub fn parse_perm(input: &str, n: usize) -> Result<Perm> {
    let trimmed = input.trim();
    if trimmed == "id" || trimmed == "e" || trimmed == "()" {
        return Perm::from_cycles(n, &[]);
    }
    let mut cycles: Vec<Vec<usize>> = vec![];
    let mut rest = trimmed;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!("expected '(' in cycle notation: {input}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced cycle in {input}")))?;
        let inner = &rest[1..close];
        let points: Vec<usize> = inner
            .split([' ', ','])
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad cycle point '{s}'")))
            })
            .collect::<Result<_>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = &rest[close + 1..];
    }
    Perm::from_cycles(n, &cycles)
}

/// Parse a subgroup description: `trivial`, a named group (`S5`, `A4`, `C5`,
/// `D5`, `V4`, `F20`), or a comma-separated generator list in cycle notation.
/// `degree_hint` fixes `n` when the name does not determine it.
pub fn parse_group(input: &str, degree_hint: Option<usize>) -> Result<PermGroup> {
    let s = input.trim();
    let lowered = s.to_ascii_lowercase();
    if lowered == "trivial" || lowered == "1" {
        let n = degree_hint.ok_or_else(|| {
            Error::Parse("the trivial group needs a degree from context".into())
        })?;
        return Ok(PermGroup::trivial(n));
    }
    if let Some(group) = parse_named_group(&lowered, degree_hint)? {
        if let Some(n) = degree_hint {
            if group.degree() != n {
                return Err(Error::Parse(format!(
                    "group {s} acts on {} points but degree {n} was required",
                    group.degree()
                )));
            }
        }
        return Ok(group);
    }
    // generator list
    let n = degree_hint.ok_or_else(|| {
        Error::Parse("generator lists need a degree from context".into())
    })?;
    let mut gens = vec![];
    for part in split_generator_list(s) {
        gens.push(parse_perm(&part, n)?);
    }
    PermGroup::generate(n, gens)
}

fn split_generator_list(s: &str) -> Vec<String> {
    // split on commas that are not inside parentheses
    let mut out = vec![];
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => {
                if !cur.trim().is_empty() {
                    out.push(cur.trim().to_string());
                }
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn parse_named_group(lowered: &str, _degree_hint: Option<usize>) -> Result<Option<PermGroup>> {
    if lowered.len() < 2 || !lowered.is_char_boundary(1) {
        return Ok(None);
    }
    if lowered == "v4" {
        return Ok(Some(PermGroup::klein4()));
    }
    if lowered == "f20" {
        return Ok(Some(PermGroup::frobenius20()));
    }
    if lowered == "d10" {
        // dihedral of order 10 in its action on 5 points
        return Ok(Some(PermGroup::dihedral(5)));
    }
    let (letter, digits) = lowered.split_at(1);
    if let Ok(k) = digits.parse::<usize>() {
        let group = match letter {
            "s" if (1..=7).contains(&k) => Some(PermGroup::symmetric(k)),
            "a" if (3..=7).contains(&k) => Some(PermGroup::alternating(k)),
            "c" if (1..=7).contains(&k) => Some(PermGroup::cyclic(k)),
            "d" if (3..=7).contains(&k) => Some(PermGroup::dihedral(k)),
            _ => None,
        };
        return Ok(group);
    }
    Ok(None)
}
