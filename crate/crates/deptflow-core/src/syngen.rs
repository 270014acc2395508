//! Deterministic synthetic event-log generator with planted structure.
//!
//! Episodes are random walks over a department universe of planted
//! communities plus optional hub departments wired to every community
//! (the laboratory/diagnostic role: high weighted degree and betweenness
//! by construction). Geometric episode and visit lengths give the
//! positively skewed degree distributions seen in real transfer logs.
//! Output is fully determined by the spec and its seed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use chrono::{Duration, NaiveDate, NaiveDateTime};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};

use crate::episode::EventRecord;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SynGenError {
    #[error("invalid spec field `{field}`: {reason}")]
    SpecInvalid {
        field: &'static str,
        reason: String,
    },
}

/// Parameters of the synthetic corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    /// Departments per planted community.
    pub community_sizes: Vec<usize>,
    /// Departments wired to all communities.
    pub n_hubs: usize,
    pub n_patients: usize,
    /// Mean episodes per patient (geometric, >= 1).
    pub episodes_per_patient: f64,
    /// Mean visits per episode (geometric, >= 2).
    pub visits_per_episode: f64,
    /// Probability a transfer leaves the current community.
    pub p_cross: f64,
    /// Inclusive calendar-year range.
    pub year_range: (i32, i32),
    /// Optional per-department, per-year traffic multiplier (default 1.0).
    pub traffic_ramp: BTreeMap<String, BTreeMap<i32, f64>>,
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            community_sizes: alloc::vec![8, 8, 8, 8],
            n_hubs: 2,
            n_patients: 1000,
            episodes_per_patient: 2.0,
            visits_per_episode: 4.0,
            p_cross: 0.2,
            year_range: (2010, 2016),
            traffic_ramp: BTreeMap::new(),
            seed: 42,
        }
    }
}

/// Planted community and true transfer totals per department. Transfer
/// totals count both endpoints, so they sum to twice the transfer count.
#[derive(Debug, Clone, PartialEq)]
pub struct DeptTruth {
    /// `None` marks a hub.
    pub community: Option<usize>,
    pub transfers: u64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct GroundTruth {
    pub departments: BTreeMap<String, DeptTruth>,
}

/// Department names the generator will use, in id order: community
/// members first, then hubs.
pub fn department_names(spec: &CorpusSpec) -> Vec<String> {
    let mut names = Vec::new();
    for (c, &size) in spec.community_sizes.iter().enumerate() {
        for i in 0..size {
            names.push(format!("com{c}_dept{i}"));
        }
    }
    for h in 0..spec.n_hubs {
        names.push(format!("hub{h}"));
    }
    names
}

struct Universe {
    names: Vec<String>,
    community_of: Vec<Option<usize>>,
    members: Vec<Vec<usize>>,
    hubs: Vec<usize>,
}

impl Universe {
    fn build(spec: &CorpusSpec) -> Universe {
        let names = department_names(spec);
        let mut community_of = Vec::with_capacity(names.len());
        let mut members: Vec<Vec<usize>> = alloc::vec![Vec::new(); spec.community_sizes.len()];
        let mut id = 0usize;
        for (c, &size) in spec.community_sizes.iter().enumerate() {
            for _ in 0..size {
                community_of.push(Some(c));
                members[c].push(id);
                id += 1;
            }
        }
        let mut hubs = Vec::with_capacity(spec.n_hubs);
        for _ in 0..spec.n_hubs {
            community_of.push(None);
            hubs.push(id);
            id += 1;
        }
        Universe {
            names,
            community_of,
            members,
            hubs,
        }
    }
}

fn validate(spec: &CorpusSpec) -> Result<(), SynGenError> {
    let fail = |field: &'static str, reason: &str| {
        Err(SynGenError::SpecInvalid {
            field,
            reason: reason.to_string(),
        })
    };
    if !(0.0..=1.0).contains(&spec.p_cross) {
        return fail("p_cross", "must lie in [0, 1]");
    }
    if spec.year_range.0 > spec.year_range.1 {
        return fail("year_range", "start year after end year");
    }
    if !spec.episodes_per_patient.is_finite() || spec.episodes_per_patient < 1.0 {
        return fail("episodes_per_patient", "mean must be >= 1");
    }
    if !spec.visits_per_episode.is_finite() || spec.visits_per_episode < 2.0 {
        return fail("visits_per_episode", "mean must be >= 2");
    }
    if spec.community_sizes.iter().any(|&s| s == 0) {
        return fail("community_sizes", "zero-size community");
    }
    let total: usize = spec.community_sizes.iter().sum::<usize>() + spec.n_hubs;
    if spec.n_patients > 0 && total == 0 {
        return fail("community_sizes", "no departments to visit");
    }
    for (dept, by_year) in &spec.traffic_ramp {
        for (&year, &mult) in by_year {
            if !mult.is_finite() || mult < 0.0 {
                return fail("traffic_ramp", "multiplier must be finite and >= 0");
            }
            let _ = (dept, year);
        }
    }
    Ok(())
}

/// Generates the event log and its ground truth. Fully deterministic for
/// a given spec (including its seed).
pub fn generate(spec: &CorpusSpec) -> Result<(Vec<EventRecord>, GroundTruth), SynGenError> {
    validate(spec)?;
    let universe = Universe::build(spec);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let ramp = |dept: usize, year: i32| -> f64 {
        spec.traffic_ramp
            .get(&universe.names[dept])
            .and_then(|by_year| by_year.get(&year))
            .copied()
            .unwrap_or(1.0)
    };

    let years: Vec<i32> = (spec.year_range.0..=spec.year_range.1).collect();
    let year_weights: Vec<f64> = years
        .iter()
        .map(|&y| (0..universe.names.len()).map(|d| ramp(d, y)).sum::<f64>())
        .collect();

    let episodes_dist = Geometric::new(1.0 / spec.episodes_per_patient)
        .expect("validated mean >= 1 gives p in (0, 1]");
    let visits_dist = Geometric::new(1.0 / spec.visits_per_episode)
        .expect("validated mean >= 2 gives p in (0, 1]");

    let mut records = Vec::new();
    let mut truth = GroundTruth::default();
    for (id, name) in universe.names.iter().enumerate() {
        truth.departments.insert(
            name.clone(),
            DeptTruth {
                community: universe.community_of[id],
                transfers: 0,
            },
        );
    }

    for patient in 0..spec.n_patients {
        let patient_id = format!("p{patient:05}");
        let episodes = 1 + episodes_dist.sample(&mut rng);
        for episode in 0..episodes {
            let episode_id = format!("{patient_id}e{episode:03}");
            let year = weighted_pick(&mut rng, &years, &year_weights);
            let mut at = random_datetime_in_year(&mut rng, year);
            let target_visits = 1 + visits_dist.sample(&mut rng) as usize;

            let mut current = match pick_department(
                &mut rng,
                (0..universe.names.len()).collect::<Vec<_>>().as_slice(),
                None,
                year,
                &ramp,
            ) {
                Some(d) => d,
                None => continue,
            };
            push_record(&mut records, &patient_id, &episode_id, &universe, current, at);

            for _ in 1..target_visits {
                let next = match next_department(&mut rng, &universe, spec, current, year, &ramp) {
                    Some(d) => d,
                    None => break,
                };
                at += Duration::minutes(rng.random_range(15..=360));
                push_record(&mut records, &patient_id, &episode_id, &universe, next, at);
                for dept in [current, next] {
                    truth
                        .departments
                        .get_mut(&universe.names[dept])
                        .expect("all departments registered")
                        .transfers += 1;
                }
                current = next;
            }
        }
    }

    Ok((records, truth))
}

fn push_record(
    records: &mut Vec<EventRecord>,
    patient_id: &str,
    episode_id: &str,
    universe: &Universe,
    dept: usize,
    at: NaiveDateTime,
) {
    let seq = records.len();
    records.push(EventRecord {
        patient_id: patient_id.to_string(),
        episode_id: episode_id.to_string(),
        department: universe.names[dept].clone(),
        timestamp: at,
        seq,
    });
}

/// Next step of the walk; `None` truncates the episode. Never returns the
/// current department, so emitted logs carry no consecutive repeats.
fn next_department(
    rng: &mut ChaCha8Rng,
    universe: &Universe,
    spec: &CorpusSpec,
    current: usize,
    year: i32,
    ramp: &dyn Fn(usize, i32) -> f64,
) -> Option<usize> {
    match universe.community_of[current] {
        // From a hub: land in any community.
        None => {
            if universe.members.is_empty() {
                return None;
            }
            let c = rng.random_range(0..universe.members.len());
            pick_department(rng, &universe.members[c], Some(current), year, ramp)
        }
        Some(c) => {
            let cross = spec.p_cross > 0.0 && rng.random::<f64>() < spec.p_cross;
            if cross {
                if !universe.hubs.is_empty() {
                    return pick_department(rng, &universe.hubs, Some(current), year, ramp);
                }
                // No hubs: jump straight into another community.
                let foreign: Vec<usize> = (0..universe.members.len())
                    .filter(|&other| other != c)
                    .flat_map(|other| universe.members[other].iter().copied())
                    .collect();
                if !foreign.is_empty() {
                    return pick_department(rng, &foreign, Some(current), year, ramp);
                }
            }
            pick_department(rng, &universe.members[c], Some(current), year, ramp)
        }
    }
}

/// Ramp-weighted choice among candidates, excluding `current`; falls back
/// to a uniform choice when every candidate's multiplier is zero.
fn pick_department(
    rng: &mut ChaCha8Rng,
    candidates: &[usize],
    current: Option<usize>,
    year: i32,
    ramp: &dyn Fn(usize, i32) -> f64,
) -> Option<usize> {
    let eligible: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&d| Some(d) != current)
        .collect();
    if eligible.is_empty() {
        return None;
    }
    let weights: Vec<f64> = eligible.iter().map(|&d| ramp(d, year)).collect();
    Some(eligible[weighted_index(rng, &weights)])
}

fn weighted_pick<T: Copy>(rng: &mut ChaCha8Rng, items: &[T], weights: &[f64]) -> T {
    items[weighted_index(rng, weights)]
}

fn weighted_index(rng: &mut ChaCha8Rng, weights: &[f64]) -> usize {
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return rng.random_range(0..weights.len());
    }
    let mut target = rng.random::<f64>() * total;
    for (i, &w) in weights.iter().enumerate() {
        target -= w;
        if target < 0.0 {
            return i;
        }
    }
    weights.len() - 1
}

fn random_datetime_in_year(rng: &mut ChaCha8Rng, year: i32) -> NaiveDateTime {
    let start = NaiveDate::from_ymd_opt(year, 1, 1).expect("January 1st always exists");
    let days = if start.leap_year() { 366 } else { 365 };
    let date = start + Duration::days(rng.random_range(0..days));
    let secs = rng.random_range(0..86_400);
    date.and_hms_opt(0, 0, 0).expect("midnight always exists") + Duration::seconds(secs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{build_static, BuildConfig};
    use crate::episode::build_episodes;
    use chrono::Datelike;

    fn tiny_spec() -> CorpusSpec {
        CorpusSpec {
            community_sizes: alloc::vec![3, 3],
            n_hubs: 1,
            n_patients: 40,
            episodes_per_patient: 1.5,
            visits_per_episode: 3.0,
            p_cross: 0.3,
            year_range: (2010, 2012),
            traffic_ramp: BTreeMap::new(),
            seed: 7,
        }
    }

    #[test]
    fn generation_is_seed_deterministic() {
        let spec = tiny_spec();
        let (a, _) = generate(&spec).unwrap();
        let (b, _) = generate(&spec).unwrap();
        assert_eq!(a, b);
        let mut other = spec;
        other.seed = 8;
        let (c, _) = generate(&other).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn no_patients_means_no_records() {
        let spec = CorpusSpec {
            n_patients: 0,
            ..tiny_spec()
        };
        let (records, truth) = generate(&spec).unwrap();
        assert!(records.is_empty());
        assert!(truth.departments.values().all(|d| d.transfers == 0));
    }

    #[test]
    fn truth_totals_are_twice_the_transfer_count() {
        let (records, truth) = generate(&tiny_spec()).unwrap();
        // Recount transfers from the emitted records directly.
        let episodes = build_episodes(&records, true);
        let transfers: usize = episodes.iter().map(|e| e.len().saturating_sub(1)).sum();
        let total: u64 = truth.departments.values().map(|d| d.transfers).sum();
        assert_eq!(total, 2 * transfers as u64);
    }

    #[test]
    fn no_cross_traffic_disconnects_communities() {
        let spec = CorpusSpec {
            community_sizes: alloc::vec![4, 4],
            n_hubs: 0,
            n_patients: 60,
            p_cross: 0.0,
            ..tiny_spec()
        };
        let (records, _) = generate(&spec).unwrap();
        let episodes = build_episodes(&records, true);
        let cfg = BuildConfig {
            static_min_interactions: 0,
            ..BuildConfig::default()
        };
        let g = build_static(&episodes, &cfg).unwrap();
        assert!(g.weakly_connected_components().len() >= 2);
    }

    #[test]
    fn emitted_records_have_increasing_seq_and_no_repeats() {
        let (records, _) = generate(&tiny_spec()).unwrap();
        for (i, r) in records.iter().enumerate() {
            assert_eq!(r.seq, i);
            assert!(!r.department.is_empty());
        }
        let episodes = build_episodes(&records, false);
        for e in &episodes {
            for pair in e.visits.windows(2) {
                assert_ne!(pair[0].department, pair[1].department);
            }
        }
    }

    #[test]
    fn records_stay_within_the_year_range_at_episode_start() {
        let spec = tiny_spec();
        let (records, _) = generate(&spec).unwrap();
        let episodes = build_episodes(&records, true);
        for e in episodes {
            let first = e.visits.first().unwrap().at.year();
            assert!((spec.year_range.0..=spec.year_range.1).contains(&first));
        }
    }

    #[test]
    fn spec_validation_names_the_field() {
        let bad = CorpusSpec {
            p_cross: 1.5,
            ..tiny_spec()
        };
        match generate(&bad).unwrap_err() {
            SynGenError::SpecInvalid { field, .. } => assert_eq!(field, "p_cross"),
        }
        let bad = CorpusSpec {
            year_range: (2016, 2010),
            ..tiny_spec()
        };
        match generate(&bad).unwrap_err() {
            SynGenError::SpecInvalid { field, .. } => assert_eq!(field, "year_range"),
        }
        let bad = CorpusSpec {
            visits_per_episode: 1.0,
            ..tiny_spec()
        };
        match generate(&bad).unwrap_err() {
            SynGenError::SpecInvalid { field, .. } => {
                assert_eq!(field, "visits_per_episode")
            }
        }
    }

    #[test]
    fn traffic_ramp_shifts_volume_toward_ramped_years() {
        let mut ramp = BTreeMap::new();
        let mut by_year = BTreeMap::new();
        by_year.insert(2010, 0.2);
        by_year.insert(2011, 1.0);
        by_year.insert(2012, 6.0);
        ramp.insert("com0_dept0".to_string(), by_year);
        let spec = CorpusSpec {
            community_sizes: alloc::vec![2],
            n_hubs: 0,
            n_patients: 400,
            p_cross: 0.0,
            traffic_ramp: ramp,
            ..tiny_spec()
        };
        let (records, _) = generate(&spec).unwrap();
        let mut by_year_count: BTreeMap<i32, usize> = BTreeMap::new();
        for r in records.iter().filter(|r| r.department == "com0_dept0") {
            *by_year_count.entry(r.timestamp.year()).or_insert(0) += 1;
        }
        let low = by_year_count.get(&2010).copied().unwrap_or(0);
        let high = by_year_count.get(&2012).copied().unwrap_or(0);
        assert!(
            high > low,
            "ramped year should carry more traffic: 2010={low} 2012={high}"
        );
    }
}
