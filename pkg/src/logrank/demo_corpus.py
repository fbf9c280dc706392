"""Seeded generator for the bundled demo corpus.

Produces Python-like packages whose identifier statistics resemble real
code: names are reused locally with a strong recency bias, module-level
functions are called mostly from their own file, and a shared pool of
builtins and imported helpers appears everywhere.

Regenerate the bundled copy with ``python -m logrank.demo_corpus``.
"""

from __future__ import annotations

import random
from importlib import resources
from pathlib import Path

VERBS = (
    "get set load save parse build make read write update create delete find check handle "
    "process compute render fetch send apply merge split format validate resolve register emit "
    "close open reset init start stop run add remove count sort filter collect scan encode decode "
    "flush refresh select insert lookup normalize convert attach detach wrap unwrap dispatch "
    "schedule notify publish consume store restore prepare finalize"
).split()

NOUNS = (
    "config user item node tree path file record session token value key index table row column "
    "event message request response buffer cache queue stream header payload result error state "
    "context handler manager client server model schema field entry name size offset length "
    "limit timeout port host data text line block group score weight rank channel worker task job "
    "batch chunk frame packet socket cursor query filter rule policy route plugin hook signal "
    "metric counter timer window layer widget panel theme style color font image asset resource "
    "account profile role permission tenant order invoice payment price product cart customer"
).split()

PACKAGES = ("core", "storage", "net", "ui", "billing", "analytics")
BUILTINS = (
    "len range isinstance print dict list str int sorted enumerate zip getattr setattr open min max "
    "sum any all tuple set float bool repr iter next hasattr super type map"
).split()
METHODS = "append extend get items keys values pop update join split strip startswith format".split()


def _snake(*parts):
    return "_".join(parts)


def _camel(*parts):
    return parts[0] + "".join(p.capitalize() for p in parts[1:])


class _Module:
    def __init__(self, rng: random.Random, package: str, name: str, nouns: list[str], exports: dict):
        self.rng = rng
        self.package = package
        self.name = name
        self.nouns = nouns
        self.exports = exports  # module path -> exported function names
        self.style = _camel if rng.random() < 0.25 else _snake
        self.lines: list[str] = []
        self.functions: list[str] = []
        self.constants: list[str] = []
        self.imported: list[str] = []
        self.recent: list[str] = []

    def noun(self):
        return self.rng.choice(self.nouns)

    def use(self, name):
        if name in self.recent:
            self.recent.remove(name)
        self.recent.append(name)
        del self.recent[:-12]
        return name

    def pick(self, scope: list[str]):
        """Choose an identifier: mostly recent, then local scope, then file-level."""
        r = self.rng.random()
        live = [n for n in self.recent if n in scope]
        if live and r < 0.55:
            return self.use(live[-1 - min(int(self.rng.expovariate(0.9)), len(live) - 1)])
        if scope and r < 0.85:
            return self.use(self.rng.choice(scope))
        pool = self.functions + self.constants + self.imported
        if pool and r < 0.95:
            return self.use(self.rng.choice(pool))
        return self.use(self.rng.choice(BUILTINS))

    def callee(self):
        r = self.rng.random()
        if self.functions and r < 0.45:
            return self.use(self.rng.choice(self.functions[-6:]))
        if self.imported and r < 0.7:
            return self.use(self.rng.choice(self.imported))
        return self.use(self.rng.choice(BUILTINS))

    def expr(self, scope):
        r = self.rng.random()
        if r < 0.35:
            args = ", ".join(self.pick(scope) for _ in range(self.rng.randint(0, 3)))
            return f"{self.callee()}({args})"
        if r < 0.5:
            return f"{self.pick(scope)}.{self.rng.choice(METHODS)}({self.pick(scope)})"
        if r < 0.6:
            return f"{self.pick(scope)}[{self.pick(scope)}]"
        if r < 0.7:
            return f"{self.pick(scope)} + {self.rng.randint(1, 9)}"
        if r < 0.78:
            return self.rng.choice(("None", "True", "False", "[]", "{}", "0", '""'))
        return self.pick(scope)

    def statements(self, scope: list[str], indent: int, budget: int, in_class: bool, in_loop: bool = False):
        pad = "    " * indent
        out = []
        while budget > 0:
            r = self.rng.random()
            if r < 0.34 or indent > 3:
                if self.rng.random() < 0.5 or not scope:
                    var = self.style(self.noun()) if self.rng.random() < 0.6 else self.style(self.noun(), self.noun())
                    scope.append(var)
                else:
                    var = self.pick(scope)
                target = f"self.{var}" if in_class and self.rng.random() < 0.2 else self.use(var)
                out.append(f"{pad}{target} = {self.expr(scope)}")
                budget -= 1
            elif r < 0.5:
                out.append(f"{pad}{self.pick(scope)}.{self.rng.choice(METHODS)}({self.expr(scope)})")
                budget -= 1
            elif r < 0.66:
                cond = self.pick(scope)
                op = self.rng.choice(("is None", "is not None", "", "> 0", "in " + self.pick(scope)))
                out.append(f"{pad}if {'not ' if not op and self.rng.random() < 0.4 else ''}{cond} {op}".rstrip() + ":")
                n = self.rng.randint(1, 3)
                out += self.statements(scope, indent + 1, n, in_class, in_loop)
                if self.rng.random() < 0.3:
                    out.append(f"{pad}else:")
                    out += self.statements(scope, indent + 1, 1, in_class, in_loop)
                budget -= n + 1
            elif r < 0.8:
                loop_var = self.style(self.noun())
                seq = self.pick(scope)
                scope.append(loop_var)
                self.use(loop_var)
                if self.rng.random() < 0.8:
                    out.append(f"{pad}for {loop_var} in {seq}:")
                else:
                    out.append(f"{pad}while {seq}:")
                n = self.rng.randint(1, 3)
                out += self.statements(scope, indent + 1, n, in_class, True)
                budget -= n + 1
            elif r < 0.86 and indent > 1:
                out.append(f"{pad}{self.rng.choice(('continue', 'break', 'pass'))}" if in_loop else f"{pad}pass")
                budget -= 1
            else:
                out.append(f"{pad}{self.callee()}({self.pick(scope)})")
                budget -= 1
        return out

    def function(self, name: str, indent: int, in_class: bool):
        pad = "    " * indent
        params = [self.style(self.noun()) for _ in range(self.rng.randint(0, 3))]
        params = list(dict.fromkeys(params))
        sig = (["self"] if in_class else []) + params
        if self.rng.random() < 0.2:
            extra = self.style(self.noun())
            if extra not in params:
                sig.append(f"{extra}=None")
        lines = [f"{pad}def {name}({', '.join(sig)}):"]
        scope = list(params) + (["self"] if in_class else [])
        for p in scope:
            self.use(p)
        body = self.statements(scope, indent + 1, self.rng.randint(3, 9), in_class)
        body.append(f"{pad}    return {self.pick(scope) if scope else 'None'}")
        return lines + body

    def render(self) -> str:
        rng = self.rng
        out = []
        for mod in rng.sample(sorted(self.exports), k=min(3, len(self.exports))):
            if mod == f"{self.package}.{self.name}":
                continue
            names = rng.sample(self.exports[mod], k=min(2, len(self.exports[mod])))
            self.imported += names
            out.append(f"from {mod} import {', '.join(names)}")
        if rng.random() < 0.6:
            out.insert(0, f"import {rng.choice(('os', 'sys', 'json', 're', 'time', 'logging'))}")
        out.append("")
        for _ in range(rng.randint(1, 3)):
            const = "_".join(p.upper() for p in (self.noun(), rng.choice(("limit", "size", "timeout", "count", "name"))))
            self.constants.append(const)
            out.append(f"{const} = {rng.randint(1, 500)}")
        out.append("")
        own = self.exports[f"{self.package}.{self.name}"]
        for fname in own:
            self.functions.append(fname)
            out += [""] + self.function(fname, 0, False)
        for _ in range(rng.randint(0, 2)):
            cls = self.noun().capitalize() + rng.choice(("Manager", "Handler", "Client", "Store", "Builder", "View"))
            out += ["", "", f"class {cls}:"]
            self.use(cls)
            for m in ["__init__"] + [self.style(rng.choice(VERBS), self.noun()) for _ in range(rng.randint(1, 4))]:
                out += self.function(m, 1, True) + [""]
            self.functions.append(cls)
        return "\n".join(out).rstrip() + "\n"


def generate(seed: int = 7, modules_per_package: int = 10) -> dict[str, str]:
    """Return ``{relative_path: source}`` for the whole corpus."""
    rng = random.Random(seed)
    themes = {p: rng.sample(NOUNS, 24) for p in PACKAGES}
    exports = {}
    layout = []
    for pkg in PACKAGES:
        for i in range(modules_per_package):
            name = f"{rng.choice(themes[pkg])}_{rng.choice(('utils', 'base', 'service', 'model', 'io', 'ops', 'api'))}{i}"
            fns = list(dict.fromkeys(
                (_camel if rng.random() < 0.25 else _snake)(rng.choice(VERBS), rng.choice(themes[pkg]))
                for _ in range(rng.randint(3, 7))
            ))
            exports[f"{pkg}.{name}"] = fns
            layout.append((pkg, name))
    files = {}
    for pkg, name in layout:
        mod = _Module(random.Random(rng.random()), pkg, name, themes[pkg], exports)
        files[f"{pkg}/{name}.py"] = mod.render()
    return files


def bundled_path() -> Path:
    return Path(str(resources.files("logrank").joinpath("data/demo_corpus")))


def write(root: Path, files: dict[str, str]) -> None:
    for rel, text in files.items():
        path = root / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")


if __name__ == "__main__":
    write(bundled_path(), generate())
