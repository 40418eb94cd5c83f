"""
MKdocs macros for the documentation
"""

from pylawvere.configurations.suite_cfg import LAW_REGISTRY
from pylawvere.utils.versioning import PYLAWVERE_EXEC_VERSION


def define_env(env):
    """
    This is the hook for defining variables, macros and filters

    - variables: the dictionary that contains the environment variables
    - macro: a decorator function, to declare a macro.
    - filter: a function with one of more arguments,
        used to perform a transformation
    """

    env.variables["version"] = PYLAWVERE_EXEC_VERSION

    @env.macro
    def law_table(module: str = "") -> str:
        """Markdown table of the registered laws, optionally of one module."""
        rows = ["| Law | Module | Statement | Source |", "| --- | --- | --- | --- |"]
        for law, entry in LAW_REGISTRY.items():
            if module and entry["module"] != module:
                continue
            rows.append(f"| `{law}` | {entry['module']} | {entry['statement']} | {entry['reference']} |")
        return "\n".join(rows)
