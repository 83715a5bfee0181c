# applications/lenguaje/formato.py

"""Formato canónico de scripts: una sentencia por línea y paréntesis mínimos."""

from .nodos import (
    Afirmacion, Asignacion, Binaria, Igualdad, Llamada, Negacion, Nombre, Numero,
    RestriccionRazon, Segmento,
)

_SUMA, _PRODUCTO, _UNARIO, _POTENCIA, _ATOMO = 1, 2, 3, 4, 5
_NIVEL = {'+': _SUMA, '-': _SUMA, '*': _PRODUCTO, '/': _PRODUCTO, '^': _POTENCIA}


def _nivel(expr):
    if isinstance(expr, Binaria):
        return _NIVEL[expr.op]
    if isinstance(expr, Negacion):
        return _UNARIO
    return _ATOMO


def _envolver(expr, minimo):
    texto = format_expr(expr)
    return f'({texto})' if _nivel(expr) < minimo else texto


def format_expr(expr):
    if isinstance(expr, Numero):
        return expr.texto
    if isinstance(expr, Nombre):
        return expr.nombre
    if isinstance(expr, Segmento):
        return expr.p + expr.q
    if isinstance(expr, Llamada):
        return f'{expr.funcion}({", ".join(format_expr(a) for a in expr.args)})'
    if isinstance(expr, Negacion):
        return '-' + _envolver(expr.operando, _UNARIO)
    if isinstance(expr, Binaria):
        nivel = _NIVEL[expr.op]
        if expr.op == '^':
            # base: átomo; exponente: unario (asociativa a derecha)
            return f'{_envolver(expr.izq, _ATOMO)}^{_envolver(expr.der, _UNARIO)}'
        # asociativas a izquierda: el operando derecho va con nivel estrictamente mayor
        return f'{_envolver(expr.izq, nivel)} {expr.op} {_envolver(expr.der, nivel + 1)}'
    if isinstance(expr, Igualdad):
        return f'{format_expr(expr.izq)} = {format_expr(expr.der)}'
    raise TypeError(f'nodo desconocido: {expr!r}')


def texto_restriccion(nodo):
    if isinstance(nodo, RestriccionRazon):
        return f'ratio(a, b, c) = {nodo.p}:{nodo.q}:{nodo.r}'
    return format_expr(nodo)


def format_restriccion(nodo):
    return f'constrain {texto_restriccion(nodo)};'


def format_sentencia(nodo):
    if isinstance(nodo, Asignacion):
        return f'{nodo.nombre} = {format_expr(nodo.expr)};'
    if isinstance(nodo, Afirmacion):
        return f'assert {format_expr(nodo.afirmacion)};'
    raise TypeError(f'sentencia desconocida: {nodo!r}')


def format(script):  # noqa: A001
    lineas = [f'triangle {script.vertices};']
    lineas.extend(format_restriccion(r) for r in script.restricciones)
    lineas.extend(format_sentencia(s) for s in script.sentencias)
    return '\n'.join(lineas) + '\n'
