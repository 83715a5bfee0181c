from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from applications.lenguaje.evaluador import evaluate
from applications.lenguaje.parser import parse
from applications.nucleo.excepciones import DegenerateInput, Infeasible, OverConstrained
from applications.nucleo.precision import CONFIRM, FAST
from applications.triangulos.triangulo import Triangulo

from .muestreo import PERIMETRO, newton, perturb, sample
from .restricciones import ConjuntoRestricciones

TRIPOLAR = """
triangle ABC;
D = gergonne(A, B, C);
assert dist(A, D) = 2 * dist(C, D);
"""


def lados(T):
    return T.a, T.b, T.c


class RestriccionesTests(SimpleTestCase):

    def test_desde_texto(self):
        cs = ConjuntoRestricciones.desde_texto('ratio(a,b,c)=7:9:10')
        self.assertEqual(len(cs), 2)
        self.assertEqual(cs.texto, 'ratio(a, b, c) = 7:9:10')
        self.assertTrue(cs.cumple(0.7, 0.9, 1.0, 1e-12))
        self.assertFalse(cs.cumple(0.7, 0.9, 1.1, 1e-12))

    def test_vacio(self):
        cs = ConjuntoRestricciones.desde_texto('')
        self.assertFalse(cs)
        self.assertTrue(cs.cumple(1.0, 1.0, 1.0, 1e-12))

    def test_angulo_fijo_en_forma_polinomial(self):
        (ecuacion,) = ConjuntoRestricciones.desde_texto('angle(A) = deg(120)').ecuaciones
        # a² = b² + bc + c² con b = c = 1
        self.assertAlmostEqual(ecuacion.residuo(3 ** 0.5, 1.0, 1.0), 0.0, places=14)
        self.assertGreater(abs(ecuacion.residuo(1.0, 1.0, 1.0)), 0.1)

    def test_restriccion_angular_general(self):
        (ecuacion,) = ConjuntoRestricciones.desde_texto('angle(B) = 2 * angle(C)').ecuaciones
        # angle(B) = 2·angle(C) equivale a b² = c(a + c)
        self.assertAlmostEqual(ecuacion.residuo(5.0, 6.0, 4.0), 0.0, places=12)

    def test_raiz_de_negativo_no_cumple(self):
        cs = ConjuntoRestricciones.desde_texto('K = 1')
        self.assertFalse(cs.cumple(1.0, 1.0, 3.0, 1e-12))


class NewtonTests(SimpleTestCase):

    def test_proyecta_sobre_la_recta(self):
        cs = ConjuntoRestricciones.desde_texto('2*a = b + c')
        a, b = newton(cs, 0.7, 0.9)
        self.assertAlmostEqual(a, 1.0, places=12)
        self.assertAlmostEqual(b, 0.9, places=8)

    def test_confirmacion(self):
        cs = ConjuntoRestricciones.desde_texto('a*s = b^2 + b*c + c^2')
        a, b = newton(cs, *newton(cs, 1.2, 0.9), prec=CONFIRM)
        (r,) = cs.residuos(a, b, PERIMETRO - a - b, CONFIRM)
        self.assertLess(abs(r), 1e-28)


class SampleTests(SimpleTestCase):

    def test_2a_igual_b_mas_c(self):
        muestras = sample('2*a = b + c', 12, seed=1)
        self.assertEqual(len(muestras), 12)
        for m in muestras:
            a, b, c = lados(m.realizar())
            self.assertLessEqual(abs(2 * a - b - c), 1e-12)

    def test_angulo_recto_en_b(self):
        for m in sample('angle(B) = deg(90)', 12, seed=2):
            a, b, c = lados(m.realizar())
            self.assertLessEqual(abs(b * b - a * a - c * c), 1e-12)

    def test_7_9_10_forma_unica(self):
        muestras = sample('ratio(a,b,c) = 7:9:10', 5, seed=0)
        esperado = (7 / 26 * 3, 9 / 26 * 3, 10 / 26 * 3)
        for m in muestras:
            for x, y in zip(m.forma, esperado):
                self.assertAlmostEqual(x, y, places=12)
        # Realizaciones distintas de la misma forma
        self.assertEqual(len({m.semejanza for m in muestras}), 5)
        a, b, c = lados(muestras[0].realizar())
        self.assertAlmostEqual(a / c, 0.7, places=12)

    def test_confirmacion_del_7_9_10(self):
        (m,) = sample('ratio(a,b,c) = 7:9:10', 1, seed=0)
        T = m.realizar(CONFIRM)
        self.assertLess(abs(10 * T.a - 7 * T.c) / T.c, 1e-24)

    def test_determinismo(self):
        uno = sample('2*a = b + c', 6, seed=11)
        otro = sample('2*a = b + c', 6, seed=11)
        self.assertEqual(uno, otro)
        self.assertEqual(
            [lados(m.realizar(FAST)) for m in uno], [lados(m.realizar(FAST)) for m in otro],
        )
        self.assertNotEqual(uno, sample('2*a = b + c', 6, seed=12))

    def test_formas_distintas(self):
        muestras = sample('', 20, seed=5)
        for i, m in enumerate(muestras):
            for otra in muestras[i + 1:]:
                distancia = max(abs(x - y) for x, y in zip(m.forma, otra.forma))
                self.assertGreaterEqual(distancia, 1e-3)

    def test_cobertura(self):
        # 2a = b + c fija a = 1; b recorre (0.51, 1.49)
        bs = [m.forma[1] for m in sample('2*a = b + c', 40, seed=3)]
        self.assertGreaterEqual(max(bs) - min(bs), 0.49)

    def test_perimetro_normalizado(self):
        for m in sample('', 5, seed=4):
            self.assertAlmostEqual(sum(m.forma), 3.0, places=12)

    def test_sobredeterminado(self):
        with self.assertRaises(OverConstrained):
            sample('ratio(a,b,c) = 7:9:10; 2*a = b + c', 1)

    def test_infactible(self):
        with self.assertRaises(Infeasible):
            sample('a = b + c', 3, seed=0, max_inicios=200)

    def test_script_como_restriccion(self):
        script = parse('triangle ABC; constrain angle(A) = deg(120);')
        for m in sample(script, 3, seed=9):
            T = m.realizar()
            self.assertAlmostEqual(T.a ** 2, T.b ** 2 + T.b * T.c + T.c ** 2, places=10)


class PerturbTests(SimpleTestCase):

    def test_equilatero_sin_perturbar(self):
        T = perturb(Triangulo.from_sides(1.0, 1.0, 1.0), 0, seed=3)
        self.assertAlmostEqual(T.a, T.b, places=14)
        self.assertAlmostEqual(T.b, T.c, places=14)

    def test_determinismo(self):
        T = Triangulo.from_sides(5.0, 6.0, 7.0)
        self.assertEqual(lados(perturb(T, 1e-2, seed=1)), lados(perturb(T, 1e-2, seed=1)))
        self.assertNotEqual(lados(perturb(T, 1e-2, seed=1)), lados(perturb(T, 1e-2, seed=2)))

    @hsettings(max_examples=30, deadline=None)
    @given(st.floats(1e-4, 0.1), st.integers(0, 2 ** 31))
    def test_distancia_de_forma(self, magnitud, semilla):
        T = Triangulo.from_sides(5.0, 6.0, 7.0)
        P = perturb(T, magnitud, semilla)
        forma = [x * 3 / (T.a + T.b + T.c) for x in lados(T)]
        nueva = [x * 3 / (P.a + P.b + P.c) for x in lados(P)]
        distancia = sum((x - y) ** 2 for x, y in zip(forma, nueva)) ** 0.5
        self.assertAlmostEqual(distancia, magnitud, delta=1e-9)

    def test_fuera_de_rango(self):
        with self.assertRaises(DegenerateInput):
            perturb(Triangulo.from_sides(1.0, 1.0, 1.0), 5.0, seed=0)

    def test_perturbar_rompe_la_relacion_7_9_10(self):
        script = parse(TRIPOLAR)
        T = Triangulo.from_sides(7.0, 9.0, 10.0)
        (exacto,) = evaluate(script, T).resultados
        self.assertTrue(exacto.cumple)
        residuos = [
            evaluate(script, perturb(T, 1e-2, seed=s)).resultados[0].residuo for s in range(4)
        ]
        self.assertGreater(max(residuos), 1e-4)
