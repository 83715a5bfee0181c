# applications/lenguaje/lexer.py

import re
from dataclasses import dataclass

from .errores import GeoSyntaxError

PALABRAS_CLAVE = frozenset({'triangle', 'constrain', 'assert', 'ratio'})

_PATRONES = [
    ('ESPACIO', r'[ \t\r]+'),
    ('SALTO', r'\n'),
    ('COMENTARIO', r'#[^\n]*'),
    ('NUM', r'(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?'),
    ('IDENT', r'[A-Za-z_][A-Za-z0-9_]*'),
    ('SIMBOLO', r'[(),;=+\-*/^:]'),
]
_REGEX = re.compile('|'.join(f'(?P<{nombre}>{patron})' for nombre, patron in _PATRONES))


@dataclass(frozen=True)
class Token:
    tipo: str       # NUM, IDENT, CLAVE, SIMBOLO o FIN
    texto: str
    linea: int
    columna: int

    @property
    def pos(self):
        return (self.linea, self.columna)


def tokenizar(texto):
    tokens = []
    linea, inicio_linea, i = 1, 0, 0
    while i < len(texto):
        m = _REGEX.match(texto, i)
        if m is None:
            raise GeoSyntaxError(f'carácter inesperado {texto[i]!r}', linea, i - inicio_linea + 1)
        tipo, valor = m.lastgroup, m.group()
        columna = i - inicio_linea + 1
        if tipo == 'SALTO':
            linea += 1
            inicio_linea = m.end()
        elif tipo == 'IDENT':
            tokens.append(Token('CLAVE' if valor in PALABRAS_CLAVE else 'IDENT', valor, linea, columna))
        elif tipo in ('NUM', 'SIMBOLO'):
            tokens.append(Token(tipo, valor, linea, columna))
        i = m.end()
    tokens.append(Token('FIN', '', linea, i - inicio_linea + 1))
    return tokens
