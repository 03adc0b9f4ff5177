"""Line-oriented environment description format.

A document starts with ``mipenv 1`` and holds one record per line::

    mipenv 1
    name steel-plate
    feature hasStone
    action getStone needs - gives hasStone=1
    start -
    goal hasStone=1
    episodes 50

``#`` starts a comment and blank lines are ignored. Serialization is
canonical: parsing a serialized environment gives back an equal one.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import pyparsing as pp

from ..models import (
    Condition,
    Effect,
    Environment,
    EnvParseError,
    Goal,
    InvalidEnvironmentError,
    PrimitiveAction,
    Proposition,
    State,
)

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

identifier = pp.Regex(r"[A-Za-z_][A-Za-z0-9_-]*").set_name("name")
integer = pp.Word(pp.nums).set_name("integer").set_parse_action(lambda t: int(t[0]))
bit = pp.one_of("0 1").set_parse_action(lambda t: int(t[0]))
assignment = pp.Group(identifier + pp.Suppress("=") + bit)
assignment_list = pp.Group(pp.Suppress("-") | pp.DelimitedList(assignment))

header_record = pp.Keyword("mipenv")("kind") + integer("version")
name_record = pp.Keyword("name")("kind") + identifier("value")
feature_record = pp.Keyword("feature")("kind") + identifier("value")
action_record = (
    pp.Keyword("action")("kind")
    + identifier("value")
    + pp.Suppress(pp.Keyword("needs"))
    + assignment_list("needs")
    + pp.Suppress(pp.Keyword("gives"))
    + assignment_list("gives")
)
start_record = pp.Keyword("start")("kind") + assignment_list("assignments")
goal_record = pp.Keyword("goal")("kind") + assignment_list("assignments")
episodes_record = pp.Keyword("episodes")("kind") + integer("value")

record = (
    header_record
    | name_record
    | feature_record
    | action_record
    | start_record
    | goal_record
    | episodes_record
)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


class _DocumentBuilder:
    """Accumulates records and validates cross-record references."""

    def __init__(self, default_name: str):
        self.name = default_name
        self.features: List[str] = []
        self.feature_index: Dict[str, int] = {}
        self.actions: List[PrimitiveAction] = []
        self.start: Optional[Tuple[Proposition, ...]] = None
        self.goal: Optional[Tuple[Proposition, ...]] = None
        self.episodes: Optional[int] = None
        self.seen_header = False
        self.seen_other = False

    def props(self, pairs: pp.ParseResults, line: int) -> Tuple[Proposition, ...]:
        result = []
        for name, value in pairs:
            if name not in self.feature_index:
                raise EnvParseError(f"unknown feature {name}", line)
            result.append(Proposition(self.feature_index[name], value))
        return tuple(result)

    def add(self, parsed: pp.ParseResults, line: int) -> None:
        kind = parsed["kind"]
        if kind == "mipenv":
            if self.seen_header:
                raise EnvParseError("duplicate mipenv header", line)
            if parsed["version"] != FORMAT_VERSION:
                raise EnvParseError(
                    f"unsupported format version {parsed['version']}", line
                )
            self.seen_header = True
            return
        if not self.seen_header:
            raise EnvParseError("document must start with 'mipenv 1'", line)

        if kind == "name":
            if self.seen_other:
                raise EnvParseError("name record must directly follow the header", line)
            self.name = parsed["value"]
        elif kind == "feature":
            self._add_feature(parsed["value"], line)
        elif kind == "action":
            self._add_action(parsed, line)
        elif kind == "start":
            if self.start is not None:
                raise EnvParseError("duplicate start record", line)
            self.start = self._checked(parsed["assignments"], line, "start")
        elif kind == "goal":
            if self.goal is not None:
                raise EnvParseError("duplicate goal record", line)
            self.goal = self._checked(parsed["assignments"], line, "goal")
        elif kind == "episodes":
            if self.episodes is not None:
                raise EnvParseError("duplicate episodes record", line)
            if parsed["value"] < 1:
                raise EnvParseError("episode cap must be positive", line)
            self.episodes = parsed["value"]
        self.seen_other = True

    def _add_feature(self, name: str, line: int) -> None:
        if name in self.feature_index:
            raise EnvParseError(f"duplicate feature {name}", line)
        self.feature_index[name] = len(self.features)
        self.features.append(name)

    def _checked(
        self, pairs: pp.ParseResults, line: int, what: str
    ) -> Tuple[Proposition, ...]:
        props = self.props(pairs, line)
        if len({p.feature for p in props}) != len(props):
            raise EnvParseError(f"{what} names a feature more than once", line)
        return props

    def _add_action(self, parsed: pp.ParseResults, line: int) -> None:
        name = parsed["value"]
        if any(a.name == name for a in self.actions):
            raise EnvParseError(f"duplicate action {name}", line)
        if len(parsed["gives"]) == 0:
            raise EnvParseError(f"empty effect list for action {name}", line)
        try:
            action = PrimitiveAction(
                name=name,
                condition=Condition(self._checked(parsed["needs"], line, "needs")),
                effect=Effect(self._checked(parsed["gives"], line, "gives")),
                index=len(self.actions),
            )
        except InvalidEnvironmentError as e:
            raise EnvParseError(str(e), line) from e
        self.actions.append(action)

    def build(self) -> Environment:
        if not self.seen_header:
            raise EnvParseError("document must start with 'mipenv 1'", 1)
        m = len(self.features)
        start = State.zeros(m).with_bits(
            (p.feature, p.value) for p in (self.start or ())
        )
        kwargs = {}
        if self.episodes is not None:
            kwargs["episode_cap"] = self.episodes
        try:
            return Environment(
                name=self.name,
                features=tuple(self.features),
                actions=tuple(self.actions),
                default_start=start,
                default_goal=Goal(self.goal) if self.goal is not None else None,
                **kwargs,
            )
        except InvalidEnvironmentError as e:
            raise EnvParseError(str(e)) from e


def parse_env(text: str, default_name: str = "env") -> Environment:
    """Parse an environment document.

    Args:
        text: Document contents
        default_name: Environment name when the document has no name record

    Raises:
        EnvParseError: With the offending line number
    """
    builder = _DocumentBuilder(default_name)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        try:
            parsed = record.parse_string(line, parse_all=True)
        except pp.ParseException as e:
            raise EnvParseError(f"malformed record {line!r} ({e.msg})", lineno) from e
        builder.add(parsed, lineno)
    env = builder.build()
    logger.debug(f"Parsed environment {env.name}: {env.m} features, {len(env.actions)} actions")
    return env


def load_env_file(path: Path) -> Environment:
    """Read and parse an environment file; the file stem is the fallback name."""
    path = Path(path)
    return parse_env(path.read_text(encoding="utf-8"), default_name=path.stem)


def _render_props(env: Environment, props: Tuple[Proposition, ...]) -> str:
    if not props:
        return "-"
    return ",".join(f"{env.features[p.feature]}={p.value}" for p in props)


def serialize_env(env: Environment) -> str:
    """Canonical document for ``env``, newline-terminated."""
    lines = [f"mipenv {FORMAT_VERSION}", f"name {env.name}"]
    lines.extend(f"feature {f}" for f in env.features)
    for action in env.actions:
        lines.append(
            f"action {action.name} needs {_render_props(env, action.condition.props)} "
            f"gives {_render_props(env, action.effect.writes)}"
        )
    ones = tuple(Proposition(i, 1) for i, bit in enumerate(env.start) if bit)
    if ones:
        lines.append(f"start {_render_props(env, ones)}")
    if env.default_goal is not None:
        lines.append(f"goal {_render_props(env, env.default_goal.props)}")
    lines.append(f"episodes {env.episode_cap}")
    return "\n".join(lines) + "\n"


def parse_assignments(text: str, env: Environment) -> Tuple[Proposition, ...]:
    """Parse ``name=bit,...`` (or ``-``) against the features of ``env``.

    Raises:
        EnvParseError: On malformed text or an unknown feature
    """
    try:
        parsed = assignment_list.parse_string(text.strip(), parse_all=True)
    except pp.ParseException as e:
        raise EnvParseError(f"malformed assignment list {text!r} ({e.msg})") from e
    props = []
    for name, value in parsed[0]:
        if name not in env.features:
            raise EnvParseError(f"unknown feature {name}")
        props.append(Proposition(env.feature_index(name), value))
    return tuple(props)
