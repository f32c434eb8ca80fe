//! Alice's activation strategy.
//!
//! Uncolored incidences are either active or inactive. Alice answers each of
//! Bob's moves according to four rules:
//!
//! * **R1**: on the first move she colors a neutral incidence (uncolored,
//!   every father colored), or makes a neutral move if there is none.
//! * **R2**: if Bob colored a down incidence `i` whose down-fathers are all
//!   colored, she colors an uncolored down-brother of `i`; failing that, a
//!   neutral or active incidence, or she makes a neutral move.
//! * **R3**: otherwise she *climbs* Bob's incidence: an active incidence is
//!   colored; an inactive one is activated and the climb continues on an
//!   uncolored down-father, else an uncolored top-father; when every father
//!   is colored she colors a neutral or active incidence, or makes a neutral
//!   move.
//! * **R4**: a down incidence `i` whose down-brothers already carry at least
//!   `4a - 1` distinct colors gets one of those colors; everything else gets
//!   the lowest available color.
//!
//! A neutral move follows uncolored fathers (down-fathers first) from the
//! lowest uncolored incidence until the chain repeats, activates the cycle and
//! colors its lowest member. Ties are always broken by lowest incidence in
//! [`Relations::order_key`] order.

#[cfg(feature = "mutants")]
pub mod mutants;

use std::sync::Arc;

use crate::color::Color;
use crate::forest::{Relation, Relations};
use crate::game::{Event, GameState, IncidenceRef, Mover, Rule, Strategy, StrategyFailure};
use crate::graph::IncidenceId;

/// Uncolored incidences whose fathers are all colored.
pub fn neutral_set(state: &GameState, relations: &Relations) -> Vec<IncidenceId> {
    relations.ordered().filter(|&j| is_neutral(state, relations, j)).collect()
}

pub fn is_neutral(state: &GameState, relations: &Relations, j: IncidenceId) -> bool {
    !state.is_colored(j) && relations.fathers(j).all(|f| state.is_colored(f))
}

/// Alice's activation bookkeeping for one game.
#[derive(Debug, Clone)]
pub struct ActivationStrategy {
    relations: Arc<Relations>,
    active: Vec<bool>,
    climbs: Vec<u8>,
    #[cfg(feature = "mutants")]
    mutation: Option<mutants::Mutation>,
}

impl ActivationStrategy {
    pub fn new(relations: Arc<Relations>) -> Self {
        let n = relations.incidence_count();
        ActivationStrategy {
            relations,
            active: vec![false; n],
            climbs: vec![0; n],
            #[cfg(feature = "mutants")]
            mutation: None,
        }
    }

    #[cfg(feature = "mutants")]
    pub fn with_mutation(relations: Arc<Relations>, mutation: mutants::Mutation) -> Self {
        ActivationStrategy { mutation: Some(mutation), ..Self::new(relations) }
    }

    pub fn relations(&self) -> &Arc<Relations> {
        &self.relations
    }

    pub fn climb_counts(&self) -> &[u8] {
        &self.climbs
    }

    /// Active means activated and still uncolored.
    pub fn is_active(&self, state: &GameState, i: IncidenceId) -> bool {
        self.active[i.0] && !state.is_colored(i)
    }

    pub fn active_set(&self, state: &GameState) -> Vec<IncidenceId> {
        self.relations.ordered().filter(|&i| self.is_active(state, i)).collect()
    }

    fn first_uncolored(&self, state: &GameState, r: Relation, i: IncidenceId) -> Option<IncidenceId> {
        self.relations.get(i, r).iter().copied().find(|&j| !state.is_colored(j))
    }

    /// Lowest neutral incidence, else lowest active one.
    fn neutral_or_active(&self, state: &GameState) -> Option<IncidenceId> {
        let rel = &*self.relations;
        rel.ordered()
            .find(|&j| is_neutral(state, rel, j))
            .or_else(|| rel.ordered().find(|&j| self.is_active(state, j)))
    }

    fn activate(&mut self, state: &GameState, i: IncidenceId, trace: &mut Vec<Event>) {
        if !state.is_colored(i) && !self.active[i.0] {
            self.active[i.0] = true;
            let r = IncidenceRef::of(state.graph(), i);
            trace.push(Event::Activate { vertex: r.vertex, edge: r.edge });
        }
    }

    fn count_climb(&mut self, state: &GameState, i: IncidenceId, trace: &mut Vec<Event>) {
        self.climbs[i.0] = self.climbs[i.0].saturating_add(1);
        let r = IncidenceRef::of(state.graph(), i);
        trace.push(Event::Climb { vertex: r.vertex, edge: r.edge, count: self.climbs[i.0] });
    }

    /// The father chain used when nothing is neutral or active. Requires at
    /// least one uncolored incidence and no neutral incidence.
    pub fn neutral_move(&mut self, state: &GameState, trace: &mut Vec<Event>) -> Result<IncidenceId, StrategyFailure> {
        let rel = self.relations.clone();
        let start = rel
            .ordered()
            .find(|&i| !state.is_colored(i))
            .ok_or_else(|| StrategyFailure::Internal("neutral move on a fully colored graph".into()))?;
        if rel.ordered().any(|j| self.is_active(state, j)) {
            return Err(StrategyFailure::Internal("neutral move while an active incidence exists".into()));
        }
        let mut position = vec![usize::MAX; rel.incidence_count()];
        let mut chain = vec![start];
        position[start.0] = 0;
        let cycle_start = loop {
            let cur = *chain.last().expect("nonempty chain");
            let next = self
                .first_uncolored(state, Relation::DownFathers, cur)
                .or_else(|| self.first_uncolored(state, Relation::TopFathers, cur))
                .ok_or_else(|| StrategyFailure::Internal(format!("neutral move reached neutral incidence {}", cur.0)))?;
            if position[next.0] != usize::MAX {
                break position[next.0];
            }
            position[next.0] = chain.len();
            chain.push(next);
        };
        let cycle = &chain[cycle_start..];
        for &i in cycle {
            self.count_climb(state, i, trace);
            self.activate(state, i, trace);
        }
        trace.push(Event::NeutralMove { cycle: cycle.iter().map(|&i| IncidenceRef::of(state.graph(), i)).collect() });
        Ok(*cycle.iter().min_by_key(|&&i| rel.order_key(i)).expect("nonempty cycle"))
    }

    fn neutral_active_or_neutral_move(
        &mut self,
        state: &GameState,
        trace: &mut Vec<Event>,
    ) -> Result<IncidenceId, StrategyFailure> {
        match self.neutral_or_active(state) {
            Some(j) => Ok(j),
            None => self.neutral_move(state, trace),
        }
    }

    /// Climbs from `start`, which may be the incidence Bob just colored.
    pub fn climb(
        &mut self,
        state: &GameState,
        start: IncidenceId,
        trace: &mut Vec<Event>,
    ) -> Result<IncidenceId, StrategyFailure> {
        let mut i = start;
        // A climb revisits an incidence only when activation is disabled.
        let mut visited = Vec::new();
        loop {
            self.count_climb(state, i, trace);
            if self.is_active(state, i) {
                trace.push(Event::Rule { rule: Rule::ColorActive });
                return Ok(i);
            }
            #[cfg(feature = "mutants")]
            let skip_activation = self.mutation == Some(mutants::Mutation::NoActivation);
            #[cfg(not(feature = "mutants"))]
            let skip_activation = false;
            if !skip_activation {
                self.activate(state, i, trace);
            }
            visited.push(i);
            let next = self
                .first_uncolored(state, Relation::DownFathers, i)
                .or_else(|| self.first_uncolored(state, Relation::TopFathers, i))
                .filter(|j| !visited.contains(j));
            match next {
                Some(j) => i = j,
                None => {
                    trace.push(Event::Rule { rule: Rule::ClimbExhausted });
                    return self.neutral_active_or_neutral_move(state, trace);
                }
            }
        }
    }

    /// Rule R4.
    pub fn choose_color(&self, state: &GameState, i: IncidenceId) -> Result<(Color, bool), StrategyFailure> {
        let available = state.available_colors(i).map_err(|e| StrategyFailure::Internal(e.to_string()))?;
        if available.is_empty() {
            return Err(StrategyFailure::NoColor { incidence: i.0 });
        }
        let rel = &*self.relations;
        if rel.is_down(i) {
            let brothers = rel.colors_of(state.coloring(), i, Relation::DownBrothers);
            #[cfg(feature = "mutants")]
            if self.mutation == Some(mutants::Mutation::AvoidDownBrotherColors) {
                let fresh = available.difference(&brothers);
                return Ok(fresh.min().map(|c| (c, false)).unwrap_or((available.min().unwrap(), true)));
            }
            if brothers.len() + 1 >= 4 * rel.forest_count() {
                return match available.intersection(&brothers).min() {
                    Some(c) => Ok((c, true)),
                    None => Err(StrategyFailure::DownBrotherColorsExhausted { incidence: i.0, distinct: brothers.len() }),
                };
            }
        }
        Ok((available.min().expect("nonempty"), false))
    }

    /// Rules R1 to R3: which incidence Alice colors next.
    pub fn select_incidence(&mut self, state: &GameState, trace: &mut Vec<Event>) -> Result<IncidenceId, StrategyFailure> {
        let rel = self.relations.clone();
        match state.last_move() {
            None => {
                trace.push(Event::Rule { rule: Rule::FirstMove });
                match rel.ordered().find(|&j| is_neutral(state, &rel, j)) {
                    Some(j) => Ok(j),
                    None => self.neutral_move(state, trace),
                }
            }
            Some(m) if m.mover == Mover::Alice => {
                Err(StrategyFailure::Internal("Alice asked to move twice in a row".into()))
            }
            Some(m) => {
                let i = m.incidence;
                let down_fathers_colored = rel.get(i, Relation::DownFathers).iter().all(|&f| state.is_colored(f));
                if rel.is_down(i) && down_fathers_colored {
                    if let Some(b) = self.first_uncolored(state, Relation::DownBrothers, i) {
                        trace.push(Event::Rule { rule: Rule::DownBrother });
                        Ok(b)
                    } else {
                        trace.push(Event::Rule { rule: Rule::DownFallback });
                        self.neutral_active_or_neutral_move(state, trace)
                    }
                } else {
                    trace.push(Event::Rule { rule: Rule::Climb });
                    #[cfg(feature = "mutants")]
                    if self.mutation == Some(mutants::Mutation::SkipClimb) {
                        return self.neutral_or_active(state).or_else(|| state.uncolored().next()).ok_or(StrategyFailure::NoMove);
                    }
                    self.climb(state, i, trace)
                }
            }
        }
    }
}

impl Strategy for ActivationStrategy {
    fn name(&self) -> String {
        #[cfg(feature = "mutants")]
        if let Some(m) = self.mutation {
            return format!("activation[{m:?}]");
        }
        "activation".into()
    }

    fn choose(&mut self, state: &GameState, trace: &mut Vec<Event>) -> Result<(IncidenceId, Color), StrategyFailure> {
        #[cfg(feature = "mutants")]
        if let Some(m) = self.mutation {
            if let Some(choice) = mutants::whole_move(self, m, state, trace) {
                return Ok(choice);
            }
        }
        let i = self.select_incidence(state, trace)?;
        let (color, from_down_brothers) = self.choose_color(state, i)?;
        let r = IncidenceRef::of(state.graph(), i);
        trace.push(Event::ColorChoice { vertex: r.vertex, edge: r.edge, color, from_down_brothers });
        self.active[i.0] = false;
        Ok((i, color))
    }
}
