"""
Determinization of Büchi automata into parity automata with Safra trees.

A Safra tree is a tree of nodes labeled with disjoint sets of automaton
states. Nodes are named ``1 .. k`` in the order they were introduced, so a
lower name always means an older node. One step on a letter:

1. every node spawns a youngest child holding its accepting states,
2. all labels move to their successors,
3. a state that belongs to an older sibling is removed from younger ones,
4. empty nodes are removed,
5. a node whose children cover its whole label loses its descendants and is
   marked green,
6. names are compacted again.

The priority of a step is decided by the oldest green and the oldest
removed node. A green node gives an even priority. Removing the same node
gives the next odd one above it. A run is accepting iff the highest priority
seen infinitely often is even.
"""
from collections import deque
from typing import Dict, FrozenSet, Hashable, List, Optional, Tuple

from pldl import debug
from pldl import settings
from pldl.api.exceptions import CapExceeded
from pldl.common import all_letters

Letter = FrozenSet[str]
# (name, label, children)
Node = Tuple[int, FrozenSet, tuple]


class DPA:
    """
    A complete deterministic parity automaton with max-even acceptance.
    Priorities are attached to states (the priority of the transition that
    entered them).
    """
    def __init__(self, initial: int, transitions: Dict[int, Dict[Letter, int]],
                 priorities: Dict[int, int], alphabet: FrozenSet[str],
                 trees: Optional[Dict[int, Hashable]] = None):
        self.initial = initial
        self.transitions = transitions
        self.priorities = priorities
        self.alphabet = frozenset(alphabet)
        self.trees = trees or {}

    @property
    def states(self) -> List[int]:
        return sorted(self.transitions)

    def __len__(self):
        return len(self.transitions)

    def step(self, state: int, letter: Letter) -> int:
        return self.transitions[state][letter & self.alphabet]

    def priority(self, state: int) -> int:
        return self.priorities[state]

    def priority_set(self):
        return set(self.priorities.values())

    def letters(self) -> List[Letter]:
        return all_letters(self.alphabet)

    def accepts(self, word) -> bool:
        """Runs the automaton on a lasso word until the run repeats."""
        seen = {}
        state = self.initial
        position = 0
        visited = []
        while (state, position) not in seen:
            seen[state, position] = len(visited)
            visited.append(state)
            state = self.step(state, word.letter(position))
            position = word.successor(position)
        cycle = visited[seen[state, position]:]
        return max(self.priority(s) for s in cycle) % 2 == 0

    def __repr__(self):
        return '<%s: %s states>' % (self.__class__.__name__, len(self))


def _names(node: Optional[Node]) -> List[int]:
    if node is None:
        return []
    result = [node[0]]
    for child in node[2]:
        result += _names(child)
    return result


class _Step:
    """One Safra step, collecting the green and removed names on the way."""

    def __init__(self, nba, productive, letter, next_name):
        self.nba = nba
        self.productive = productive
        self.letter = letter
        self.next_name = next_name
        self.greens: List[int] = []
        self.removed: List[int] = []

    def spawn(self, node):
        name, label, children = node
        children = tuple(self.spawn(child) for child in children)
        accepting = frozenset(q for q in label if self.nba.is_accepting(q))
        if accepting:
            children += ((self.next_name, accepting, ()),)
            self.next_name += 1
        return name, label, children

    def move(self, node):
        name, label, children = node
        successors = set()
        for q in label:
            successors |= self.nba.successors(q, self.letter)
        label = frozenset(successors) & self.productive
        return name, label, tuple(self.move(child) for child in children)

    def _without(self, node, states):
        name, label, children = node
        return name, label - states, tuple(self._without(child, states) for child in children)

    def merge_horizontally(self, node):
        name, label, children = node
        claimed = frozenset()
        new_children = []
        for child in children:
            child = self._without(child, claimed)
            claimed |= child[1]
            new_children.append(self.merge_horizontally(child))
        return name, label, tuple(new_children)

    def remove_empty(self, node):
        name, label, children = node
        if not label:
            self.removed.extend(_names(node))
            return None
        kept = tuple(c for c in (self.remove_empty(child) for child in children) if c is not None)
        return name, label, kept

    def merge_vertically(self, node):
        name, label, children = node
        if children and frozenset().union(*(child[1] for child in children)) == label:
            self.greens.append(name)
            for child in children:
                self.removed.extend(_names(child))
            return name, label, ()
        return name, label, tuple(self.merge_vertically(child) for child in children)


def _compact(node: Optional[Node]) -> Optional[Node]:
    renaming = {old: new for new, old in enumerate(sorted(_names(node)), 1)}

    def rename(n):
        name, label, children = n
        return renaming[name], label, tuple(rename(child) for child in children)

    return None if node is None else rename(node)


def safra_step(nba, productive, tree: Optional[Node], letter: Letter, bound: int) \
        -> Tuple[Optional[Node], int]:
    """
    The successor tree and the priority of the step. ``bound`` exceeds every
    name that can occur.
    """
    if tree is None:
        return None, 1
    step = _Step(nba, productive, letter, max(_names(tree)) + 1)
    tree = step.spawn(tree)
    tree = step.move(tree)
    tree = step.merge_horizontally(tree)
    tree = step.remove_empty(tree)
    if tree is not None:
        tree = step.merge_vertically(tree)
    green = min(step.greens, default=None)
    removed = min(step.removed, default=None)
    # The removal of a name outranks its green, which outranks younger removals.
    priority = 1
    if green is not None:
        priority = 2 * (bound - green)
    if removed is not None:
        priority = max(priority, 2 * (bound - removed) + 1)
    return _compact(tree), priority


def determinize(nba, cap: Optional[int] = None) -> DPA:
    """
    A deterministic parity automaton with the language of ``nba``. Only
    productive states are tracked.

    :raises CapExceeded: if more than ``cap`` (by default
        :data:`pldl.settings.max_det_states`) states are needed.
    """
    if cap is None:
        cap = settings.max_det_states
    productive = nba.productive_states()
    letters = nba.letters()
    bound = 2 * len(nba) + 1
    initial_tree = (1, frozenset({nba.initial}), ()) if nba.initial in productive else None
    initial = (initial_tree, 1)
    numbers = {initial: 0}
    transitions: Dict[int, Dict[Letter, int]] = {}
    priorities = {0: 1}
    trees = {0: initial_tree}
    todo = deque([initial])
    while todo:
        current = todo.popleft()
        number = numbers[current]
        row = transitions[number] = {}
        for letter in letters:
            target = safra_step(nba, productive, current[0], letter, bound)
            if target not in numbers:
                if len(numbers) >= cap:
                    raise CapExceeded('deterministic parity automaton', cap)
                numbers[target] = len(numbers)
                priorities[numbers[target]] = target[1]
                trees[numbers[target]] = target[0]
                todo.append(target)
            row[letter] = numbers[target]
    dpa = DPA(0, transitions, priorities, nba.alphabet, trees)
    debug.size('dpa', len(dpa))
    return dpa
