import re
import sys
from pathlib import Path


GEOMETRIC_NK_PAT = re.compile(r"^(\d+)\^k$")
LINEAR_NK_PAT = re.compile(r"^(\d+)\*k$")
LIST_NK_PAT = re.compile(r"^\d+(,\d+)*$")


class LabException(Exception):
    '''Base for every error raised by the library.'''
    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


def parse_nk(nk_str: str, count: int) -> list[int]:
    """
    Parse the index sequence (n_k) of the slow-complexity construction.

    Accepts the geometric shorthand ``B^k`` (giving B, B^2, ..., B^count),
    the linear shorthand ``C*k`` (giving C, 2C, ..., count*C), or an explicit
    comma list, which is returned as given.
    """
    text = nk_str.replace(" ", "")
    M = GEOMETRIC_NK_PAT.match(text)
    if M:
        base = int(M.group(1))
        return [base ** k for k in range(1, count + 1)]
    M = LINEAR_NK_PAT.match(text)
    if M:
        step = int(M.group(1))
        return [step * k for k in range(1, count + 1)]
    M = LIST_NK_PAT.match(text)
    if M:
        return [int(x) for x in text.split(",")]
    raise ValueError(f"Unrecognized n_k sequence: {nk_str}")


def parse_int_list(list_str: str) -> list[int]:
    text = list_str.replace(" ", "")
    if not LIST_NK_PAT.match(text):
        raise ValueError(f"Unrecognized integer list: {list_str}")
    return [int(x) for x in text.split(",")]


def read_lines(path_str: str) -> list[str]:
    '''Non-blank stripped lines of a file, or of standard input for "-".'''
    if path_str == "-":
        text = sys.stdin.read()
    else:
        text = Path(path_str).read_text()
    return [line.strip() for line in text.splitlines() if line.strip()]


def write_lines(lines: list[str], path_str: str):
    Path(path_str).write_text("".join(f"{line}\n" for line in lines))
