# applications/explorador/render.py

"""
Figura SVG de una construcción evaluada.

Se dibuja el triángulo, cada círculo, cada recta (como segmento si está
definida por dos puntos, recortada al marco si no) y cada punto con su
etiqueta. Los puntos de Gergonne llevan la clase `gergonne` (verde).
"""

from django.template.loader import render_to_string

from applications.lenguaje.evaluador import evaluate
from applications.lenguaje.nodos import Llamada, Nombre, Segmento
from applications.nucleo.precision import FAST
from applications.triangulos.triangulo import Triangulo

PLANTILLA = 'explorador/figura.svg'
ANCHO = 600
MARGEN = 30


def _f(x):
    return f'{float(x):.6f}'


def _par_definitorio(env, nombre):
    """(P, Q) si la recta está escrita como `line(P, Q)` o `PQ`."""
    for sentencia in env.script.asignaciones:
        if sentencia.nombre != nombre:
            continue
        expr = sentencia.expr
        if isinstance(expr, Segmento):
            return expr.p, expr.q
        if isinstance(expr, Llamada) and expr.funcion == 'line' \
                and all(isinstance(a, Nombre) for a in expr.args):
            return tuple(a.nombre for a in expr.args)
    return None


def _es_gergonne(env, nombre):
    return any(
        s.nombre == nombre and isinstance(s.expr, Llamada) and s.expr.funcion == 'gergonne'
        for s in env.script.asignaciones
    )


class Marco:
    """Caja de la figura en coordenadas del modelo y su transformación a pantalla."""

    def __init__(self, env, ancho=ANCHO, margen=MARGEN):
        xs, ys = [], []
        for nombre in env.puntos():
            p = env[nombre]
            xs.append(float(p.x))
            ys.append(float(p.y))
        for nombre in env.circulos():
            w = env[nombre]
            r = float(w.radio)
            xs.extend((float(w.centro.x) - r, float(w.centro.x) + r))
            ys.extend((float(w.centro.y) - r, float(w.centro.y) + r))
        self.xmin, self.xmax = min(xs), max(xs)
        self.ymin, self.ymax = min(ys), max(ys)
        lado = max(self.xmax - self.xmin, self.ymax - self.ymin) or 1.0
        self.k = (ancho - 2 * margen) / lado
        self.margen = margen
        self.ancho = round((self.xmax - self.xmin) * self.k + 2 * margen)
        self.alto = round((self.ymax - self.ymin) * self.k + 2 * margen)

    def x(self, x):
        return (float(x) - self.xmin) * self.k + self.margen

    def y(self, y):
        # el eje y de SVG apunta hacia abajo
        return (self.ymax - float(y)) * self.k + self.margen

    def recortar(self, recta):
        """Extremos de la recta dentro del marco, o None si no lo cruza."""
        a, b, c = (float(v) for v in recta.coordenadas())
        esquinas = [(self.xmin, self.ymin), (self.xmax, self.ymin), (self.xmax, self.ymax), (self.xmin, self.ymax)]
        cortes = []
        for (x1, y1), (x2, y2) in zip(esquinas, esquinas[1:] + esquinas[:1]):
            f1, f2 = a * x1 + b * y1 + c, a * x2 + b * y2 + c
            if f1 == f2 or f1 * f2 > 0:
                continue
            t = f1 / (f1 - f2)
            cortes.append((x1 + t * (x2 - x1), y1 + t * (y2 - y1)))
        if len(cortes) < 2:
            return None
        direccion = (-b, a)
        cortes.sort(key=lambda p: p[0] * direccion[0] + p[1] * direccion[1])
        return cortes[0], cortes[-1]


def escena(env, ancho=ANCHO):
    """Contexto de la plantilla SVG para un Entorno."""
    marco = Marco(env, ancho)
    vertices = [env[v] for v in env.script.vertices]
    segmentos = []
    for nombre in env.rectas():
        par = _par_definitorio(env, nombre)
        if par is not None:
            p, q = env[par[0]], env[par[1]]
            extremos = ((float(p.x), float(p.y)), (float(q.x), float(q.y)))
            clase = 'segmento'
        else:
            extremos = marco.recortar(env[nombre])
            clase = 'recta'
            if extremos is None:
                continue
        (x1, y1), (x2, y2) = extremos
        segmentos.append({
            'nombre': nombre, 'clase': clase,
            'x1': _f(marco.x(x1)), 'y1': _f(marco.y(y1)), 'x2': _f(marco.x(x2)), 'y2': _f(marco.y(y2)),
        })
    circulos = [
        {
            'nombre': nombre,
            'cx': _f(marco.x(env[nombre].centro.x)), 'cy': _f(marco.y(env[nombre].centro.y)),
            'r': _f(float(env[nombre].radio) * marco.k),
        }
        for nombre in env.circulos()
    ]
    puntos = []
    for nombre in env.puntos():
        p = env[nombre]
        x, y = marco.x(p.x), marco.y(p.y)
        puntos.append({
            'nombre': nombre,
            'clase': 'punto gergonne' if _es_gergonne(env, nombre) else 'punto',
            'x': _f(x), 'y': _f(y), 'lx': _f(x + 5), 'ly': _f(y - 5),
        })
    return {
        'ancho': marco.ancho,
        'alto': marco.alto,
        'triangulo': ' '.join(f'{_f(marco.x(v.x))},{_f(marco.y(v.y))}' for v in vertices),
        'segmentos': segmentos,
        'circulos': circulos,
        'puntos': puntos,
    }


def render_svg(env, ancho=ANCHO):
    return render_to_string(PLANTILLA, escena(env, ancho))


def render(script, lados, semilla=0, ancho=ANCHO):
    """SVG de un script evaluado sobre el triángulo de lados (a, b, c)."""
    T = Triangulo.from_sides(*(FAST.num(x) for x in lados))
    return render_svg(evaluate(script, T, semilla=semilla), ancho)
