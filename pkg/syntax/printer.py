"""Pretty-printer that regenerates SPARC source text from the AST."""

from syntax.nodes import Program, Rule


def format_rules(rules: tuple[Rule, ...] | list[Rule]) -> str:
    return "".join(f"{rule}\n" for rule in rules)


def format_program(program: Program) -> str:
    """Render ``program`` so that parsing the result gives the same AST.

    Declarations are printed without a trailing period, one per line.
    """
    lines = ["sorts definition"]
    lines.extend(str(rule) for rule in program.sort_rules)
    lines.append("predicates declaration")
    lines.extend(str(decl) for decl in program.declarations)
    lines.append("program rules")
    lines.extend(str(rule) for rule in program.rules)
    return "\n".join(lines) + "\n"
