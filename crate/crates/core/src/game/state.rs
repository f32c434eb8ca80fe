use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::color::{Color, ColorSet, MAX_PALETTE};
use crate::forest::Relations;
use crate::graph::{Graph, IncidenceId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mover {
    Alice,
    Bob,
}

impl Mover {
    pub fn other(self) -> Mover {
        match self {
            Mover::Alice => Mover::Bob,
            Mover::Bob => Mover::Alice,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ongoing,
    AliceWins,
    BobWins,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub index: usize,
    pub mover: Mover,
    pub incidence: IncidenceId,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GameError {
    #[error("palette size {0} outside 1..={MAX_PALETTE}")]
    BadPalette(usize),
    #[error("no incidence with id {0}")]
    UnknownIncidence(usize),
    #[error("incidence {0} is already colored")]
    Occupied(usize),
    #[error("color {color} is out of the palette 1..={palette}")]
    ColorOutOfRange { color: Color, palette: Color },
    #[error("color {color} is unavailable for incidence {incidence}")]
    Unavailable { incidence: usize, color: Color },
    #[error("it is {expected:?}'s turn")]
    NotYourTurn { expected: Mover },
    #[error("the game is over")]
    GameOver,
}

/// Partial proper incidence coloring plus the move history.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    graph: Arc<Graph>,
    palette: Color,
    coloring: Vec<Color>,
    history: Vec<MoveRecord>,
}

impl GameState {
    pub fn new(graph: Arc<Graph>, palette: usize) -> Result<Self, GameError> {
        if palette == 0 || palette > MAX_PALETTE as usize {
            return Err(GameError::BadPalette(palette));
        }
        let coloring = vec![0; graph.incidence_count()];
        Ok(GameState { graph, palette: palette as Color, coloring, history: Vec::new() })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    /// Raw coloring, `0` meaning uncolored.
    pub fn coloring(&self) -> &[Color] {
        &self.coloring
    }

    pub fn color_of(&self, i: IncidenceId) -> Option<Color> {
        match self.coloring[i.0] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn is_colored(&self, i: IncidenceId) -> bool {
        self.coloring[i.0] != 0
    }

    pub fn history(&self) -> &[MoveRecord] {
        &self.history
    }

    pub fn last_move(&self) -> Option<&MoveRecord> {
        self.history.last()
    }

    /// Alice moves at even history lengths.
    pub fn turn(&self) -> Mover {
        if self.history.len().is_multiple_of(2) {
            Mover::Alice
        } else {
            Mover::Bob
        }
    }

    pub fn uncolored(&self) -> impl Iterator<Item = IncidenceId> + '_ {
        self.graph.incidence_ids().filter(|&i| !self.is_colored(i))
    }

    fn check(&self, i: IncidenceId) -> Result<(), GameError> {
        if i.0 >= self.coloring.len() {
            return Err(GameError::UnknownIncidence(i.0));
        }
        if self.is_colored(i) {
            return Err(GameError::Occupied(i.0));
        }
        Ok(())
    }

    /// Colors on incidences adjacent to the uncolored incidence `i`.
    pub fn forbidden_colors(&self, i: IncidenceId) -> Result<ColorSet, GameError> {
        self.check(i)?;
        Ok(self.forbidden_unchecked(i))
    }

    /// Same set computed from the relation groups of a forest decomposition.
    pub fn forbidden_colors_via(&self, relations: &Relations, i: IncidenceId) -> Result<ColorSet, GameError> {
        self.check(i)?;
        Ok(relations.forbidden_colors(&self.coloring, i))
    }

    fn forbidden_unchecked(&self, i: IncidenceId) -> ColorSet {
        let mut set = ColorSet::empty();
        for &j in self.graph.conflicts(i) {
            if self.coloring[j.0] != 0 {
                set.insert(self.coloring[j.0]);
            }
        }
        set
    }

    pub fn available_colors(&self, i: IncidenceId) -> Result<ColorSet, GameError> {
        self.check(i)?;
        Ok(self.available_unchecked(i))
    }

    pub(crate) fn available_unchecked(&self, i: IncidenceId) -> ColorSet {
        ColorSet::full(self.palette).difference(&self.forbidden_unchecked(i))
    }

    /// Alice wins on a total coloring; Bob wins as soon as some uncolored
    /// incidence has no available color.
    pub fn status(&self) -> Status {
        let mut any_uncolored = false;
        for i in self.uncolored() {
            any_uncolored = true;
            if self.available_unchecked(i).is_empty() {
                return Status::BobWins;
            }
        }
        if any_uncolored {
            Status::Ongoing
        } else {
            Status::AliceWins
        }
    }

    pub fn legal_moves(&self) -> Vec<(IncidenceId, Color)> {
        let mut moves = Vec::new();
        for i in self.uncolored() {
            moves.extend(self.available_unchecked(i).iter().map(|c| (i, c)));
        }
        moves
    }

    /// Validates without mutating.
    pub fn validate_move(&self, mover: Mover, i: IncidenceId, color: Color) -> Result<(), GameError> {
        if self.status() != Status::Ongoing {
            return Err(GameError::GameOver);
        }
        if mover != self.turn() {
            return Err(GameError::NotYourTurn { expected: self.turn() });
        }
        self.check(i)?;
        if color == 0 || color > self.palette {
            return Err(GameError::ColorOutOfRange { color, palette: self.palette });
        }
        if self.forbidden_unchecked(i).contains(color) {
            return Err(GameError::Unavailable { incidence: i.0, color });
        }
        Ok(())
    }

    /// Colors `i` with `color`; the state is unchanged on error.
    pub fn apply_move(&mut self, mover: Mover, i: IncidenceId, color: Color) -> Result<&MoveRecord, GameError> {
        self.validate_move(mover, i, color)?;
        self.coloring[i.0] = color;
        let index = self.history.len();
        self.history.push(MoveRecord { index, mover, incidence: i, color });
        Ok(self.history.last().expect("just pushed"))
    }

    /// Value-style variant of [`GameState::apply_move`].
    pub fn with_move(&self, mover: Mover, i: IncidenceId, color: Color) -> Result<GameState, GameError> {
        let mut next = self.clone();
        next.apply_move(mover, i, color)?;
        Ok(next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, Incidence};

    fn p2(k: usize) -> GameState {
        GameState::new(Arc::new(generate(&Family::Path { n: 2 }, 0).unwrap()), k).unwrap()
    }

    #[test]
    fn empty_state() {
        let s = p2(5);
        assert!(s.forbidden_colors(IncidenceId(0)).unwrap().is_empty());
        assert_eq!(s.available_colors(IncidenceId(0)).unwrap().iter().collect::<Vec<_>>(), vec![1, 2, 3, 4, 5]);
        assert_eq!(s.status(), Status::Ongoing);
        assert_eq!(s.turn(), Mover::Alice);
    }

    #[test]
    fn moves_and_errors() {
        let mut s = p2(2);
        s.apply_move(Mover::Alice, IncidenceId(0), 1).unwrap();
        assert_eq!(s.turn(), Mover::Bob);
        assert_eq!(s.forbidden_colors(IncidenceId(1)).unwrap().iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(s.available_colors(IncidenceId(1)).unwrap().iter().collect::<Vec<_>>(), vec![2]);
        let before = s.clone();
        assert_eq!(s.apply_move(Mover::Bob, IncidenceId(0), 2), Err(GameError::Occupied(0)));
        assert_eq!(s.apply_move(Mover::Bob, IncidenceId(1), 1), Err(GameError::Unavailable { incidence: 1, color: 1 }));
        assert_eq!(s.apply_move(Mover::Bob, IncidenceId(1), 3), Err(GameError::ColorOutOfRange { color: 3, palette: 2 }));
        assert_eq!(s.apply_move(Mover::Alice, IncidenceId(1), 2), Err(GameError::NotYourTurn { expected: Mover::Bob }));
        assert_eq!(s, before);
        s.apply_move(Mover::Bob, IncidenceId(1), 2).unwrap();
        assert_eq!(s.status(), Status::AliceWins);
        assert_eq!(s.apply_move(Mover::Alice, IncidenceId(1), 2), Err(GameError::GameOver));
    }

    #[test]
    fn eager_bob_win() {
        let mut s = p2(1);
        s.apply_move(Mover::Alice, IncidenceId(0), 1).unwrap();
        assert_eq!(s.status(), Status::BobWins);
        let star = Arc::new(generate(&Family::Star { leaves: 2 }, 0).unwrap());
        let mut s = GameState::new(star.clone(), 2).unwrap();
        let leaf = |v: usize, e: usize| star.incidence_id(Incidence { vertex: v, edge: crate::graph::EdgeId(e) }).unwrap();
        s.apply_move(Mover::Alice, leaf(1, 0), 1).unwrap();
        s.apply_move(Mover::Bob, leaf(2, 1), 2).unwrap();
        // (0, e0) now sees both colors.
        assert_eq!(s.status(), Status::BobWins);
    }

    #[test]
    fn edgeless_is_an_immediate_win() {
        let s = GameState::new(Arc::new(Graph::new(3, &[]).unwrap()), 1).unwrap();
        assert_eq!(s.status(), Status::AliceWins);
        assert!(GameState::new(Arc::new(Graph::new(3, &[]).unwrap()), 0).is_err());
    }
}
