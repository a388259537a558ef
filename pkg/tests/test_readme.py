"""Run every CLI command shown in the README against the shipped fixtures."""

import re
from pathlib import Path

from graphmin.cli import main

ROOT = Path(__file__).resolve().parent.parent
README = ROOT / "README.md"


def readme_commands():
    commands = []
    for line in README.read_text().splitlines():
        if line.startswith("$ graphmin "):
            commands.append(line[len("$ "):])
    return commands


def test_readme_lists_commands():
    assert len(readme_commands()) >= 10


def test_every_fixture_is_exercised():
    mentioned = set(re.findall(r"fixtures/(\S+\.edges)", README.read_text()))
    shipped = {p.name for p in (ROOT / "fixtures").glob("*.edges")}
    primary = {n for n in shipped if not n.endswith("_target.edges")}
    assert primary <= mentioned, sorted(primary - mentioned)


def test_readme_commands_run(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(ROOT)
    for command in readme_commands():
        redirect = None
        if " > " in command:
            command, redirect = command.split(" > ", 1)
        argv = command.split()[1:]
        code = main(argv)
        out = capsys.readouterr().out
        assert code == 0, (command, code)
        if redirect:
            Path(redirect.strip()).write_text(out)
