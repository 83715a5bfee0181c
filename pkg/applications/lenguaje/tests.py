from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from applications.nucleo.excepciones import AmbiguousSelection, ConstraintViolation, ParallelLines
from applications.nucleo.precision import CONFIRM
from applications.triangulos.triangulo import Triangulo

from .errores import ArityError, EvalError, GeoSyntaxError, KindError, UnknownFunction, UseBeforeDef
from .evaluador import evaluate
from .formato import format, format_expr
from .hechos import hechos
from .lexer import tokenizar
from .nodos import Binaria, Llamada, Negacion, Nombre, Numero, RestriccionRazon, Segmento
from .parser import parse

DEFINICION = """
triangle ABC;
D = gergonne(A, B, C);
E = touch(BC);
assert colline(A, D, E);
"""

CIRCULOS_QUE_SE_BESAN = """
triangle ABC;
D = gergonne(A, B, C);
E = cevian(A, B, C, gergonne);
w1 = incircle(A, B, E);
w2 = incircle(A, E, C);
assert tangent(w1, w2);
"""


def escaleno():
    return Triangulo.from_sides(5.0, 6.0, 7.0)


class LexerTests(SimpleTestCase):

    def test_posiciones_y_comentarios(self):
        tokens = tokenizar('triangle ABC; # comentario\nD = gergonne(A,B,C)')
        self.assertEqual([t.tipo for t in tokens[:3]], ['CLAVE', 'IDENT', 'SIMBOLO'])
        d = tokens[3]
        self.assertEqual((d.texto, d.linea, d.columna), ('D', 2, 1))
        self.assertEqual(tokens[-1].tipo, 'FIN')

    def test_caracter_invalido(self):
        with self.assertRaises(GeoSyntaxError) as ctx:
            tokenizar('triangle ABC;\nD = @')
        self.assertEqual((ctx.exception.linea, ctx.exception.columna), (2, 5))


class ParserTests(SimpleTestCase):

    def test_una_sentencia_y_una_afirmacion(self):
        script = parse('triangle ABC; D = gergonne(A,B,C); assert colline(A, D, touch(BC))')
        self.assertEqual(len(script.asignaciones), 1)
        self.assertEqual(len(script.afirmaciones), 1)
        touch = script.afirmaciones[0].afirmacion.args[2]
        self.assertEqual(touch, Llamada('touch', (Segmento('B', 'C'),)))

    def test_ratio_son_dos_ecuaciones(self):
        script = parse('triangle ABC;\nconstrain ratio(a,b,c) = 7:9:10;\n')
        self.assertEqual(script.restricciones, (RestriccionRazon('7', '9', '10'),))
        self.assertEqual(len(script.ecuaciones()), 2)

    def test_restriccion_angular(self):
        script = parse('triangle ABC; constrain angle(A) = deg(120);')
        self.assertEqual(len(script.ecuaciones()), 1)

    def test_aridad(self):
        with self.assertRaises(ArityError) as ctx:
            parse('triangle ABC;\nD = gergonne(A,B)')
        self.assertEqual(ctx.exception.linea, 2)

    def test_funcion_desconocida(self):
        with self.assertRaises(UnknownFunction):
            parse('triangle ABC; D = baricentro(A,B,C)')

    def test_uso_antes_de_definir(self):
        with self.assertRaises(UseBeforeDef) as ctx:
            parse('triangle ABC;\nD = midpoint(A, E);\nE = midpoint(B, C);')
        self.assertEqual((ctx.exception.linea, ctx.exception.columna), (2, 17))

    def test_multivaluada_sin_select(self):
        with self.assertRaises(KindError):
            parse('triangle ABC; X = intersect(AB, circumcircle(A,B,C));')
        with self.assertRaises(KindError):
            parse('triangle ABC; w = apollonius(AB, AC, BC);')

    def test_tipos_de_argumentos(self):
        with self.assertRaises(KindError):
            parse('triangle ABC; D = foot(A, B);')
        with self.assertRaises(KindError):
            parse('triangle ABC; x = dist(A, B) + A;')

    def test_redefinicion_y_reservados(self):
        with self.assertRaises(GeoSyntaxError):
            parse('triangle ABC; D = centroid(A,B,C); D = incenter(A,B,C);')
        with self.assertRaises(GeoSyntaxError):
            parse('triangle ABC; s = dist(A, B);')

    def test_cabecera_invalida(self):
        for texto in ('triangle AB;', 'triangle AAB;', 'triangle ABK;', 'D = centroid(A,B,C);'):
            with self.subTest(texto=texto), self.assertRaises(GeoSyntaxError):
                parse(texto)

    def test_punto_y_coma_obligatorio_salvo_al_final(self):
        with self.assertRaises(GeoSyntaxError) as ctx:
            parse('triangle ABC\nD = centroid(A,B,C)')
        self.assertEqual(ctx.exception.linea, 2)

    def test_restriccion_no_admite_construcciones(self):
        with self.assertRaises(KindError):
            parse('triangle ABC; constrain dist(A, B) = 1;')

    def test_precedencia(self):
        script = parse('triangle ABC; x = -a^2 + b * c;')
        expr = script.asignaciones[0].expr
        self.assertEqual(expr, Binaria(
            '+',
            Negacion(Binaria('^', Nombre('a'), Numero('2'))),
            Binaria('*', Nombre('b'), Nombre('c')),
        ))

    def test_select_con_selectores(self):
        script = parse(
            'triangle ABC; D = gergonne(A,B,C); '
            'w = select(apollonius(AB, AC, D), smallest); X = center(w);'
        )
        self.assertEqual(script.tipos['w'], 'C')
        self.assertEqual(script.tipos['X'], 'P')


class FormatoTests(SimpleTestCase):

    def test_normaliza_espacios(self):
        texto = 'triangle   ABC ;D=gergonne( A,B ,C );assert  dist(A,D)=2*dist(C,D)'
        self.assertEqual(
            format(parse(texto)),
            'triangle ABC;\nD = gergonne(A, B, C);\nassert dist(A, D) = 2 * dist(C, D);\n',
        )

    def test_parentesis_minimos(self):
        casos = {
            'x = (a + b) + c;': 'a + b + c',
            'x = a + (b + c);': 'a + (b + c)',
            'x = a - (b - c);': 'a - (b - c)',
            'x = (a * b) ^ 2;': '(a * b)^2',
            'x = 2 * -a;': '2 * -a',
            'x = -(a + b);': '-(a + b)',
            'x = a ^ b ^ c;': 'a^b^c',
            'x = (a ^ b) ^ c;': '(a^b)^c',
        }
        for fuente, esperado in casos.items():
            with self.subTest(fuente=fuente):
                script = parse('triangle ABC; ' + fuente)
                self.assertEqual(format_expr(script.asignaciones[0].expr), esperado)

    def test_round_trip_y_punto_fijo(self):
        for texto in (DEFINICION, CIRCULOS_QUE_SE_BESAN,
                      'triangle XYZ; constrain ratio(a,b,c)=7:9:10; constrain 2*a = b + c;'):
            with self.subTest(texto=texto):
                script = parse(texto)
                formateado = format(script)
                self.assertEqual(parse(formateado), script)
                self.assertEqual(format(parse(formateado)), formateado)


def _envolver(texto):
    return '(' + texto + ')'


hojas = st.sampled_from(['a', 'b', 'c', 's', 'K', '2', '0.5', '1e-3', 'dist(A, B)', 'area(A, B, C)'])
expresiones = st.recursive(
    hojas,
    lambda hijos: st.one_of(
        st.tuples(hijos, st.sampled_from(['+', '-', '*', '/', '^']), hijos).map(
            lambda t: f'{t[0]} {t[1]} {t[2]}'),
        hijos.map(lambda x: '-' + x),
        hijos.map(_envolver),
        st.tuples(hijos, hijos).map(lambda t: f'abs({t[0]}) + sqrt({t[1]})'),
    ),
    max_leaves=8,
)


class FuzzFormatoTests(SimpleTestCase):

    @hsettings(max_examples=200, deadline=None)
    @given(expresiones, expresiones)
    def test_round_trip_scripts_generados(self, e1, e2):
        texto = f'triangle ABC;\nx1 = {e1};\nassert x1 = {e2};\n'
        script = parse(texto)
        formateado = format(script)
        self.assertEqual(parse(formateado), script)
        self.assertEqual(format(parse(formateado)), formateado)


class EvaluadorTests(SimpleTestCase):

    def test_propiedad_definitoria(self):
        env = evaluate(parse(DEFINICION), escaleno())
        (resultado,) = env.resultados
        self.assertTrue(resultado.cumple)
        self.assertEqual(env.puntos(), ['A', 'B', 'C', 'D', 'E'])

    def test_propiedad_definitoria_en_confirmacion(self):
        T = Triangulo.from_sides(CONFIRM.num(5), CONFIRM.num(6), CONFIRM.num(7))
        env = evaluate(parse(DEFINICION), T)
        (resultado,) = env.resultados
        self.assertTrue(resultado.cumple)
        self.assertLess(resultado.residuo, 1e-24)

    def test_circulos_que_se_besan(self):
        env = evaluate(parse(CIRCULOS_QUE_SE_BESAN), escaleno())
        self.assertTrue(env.todas_cumplen)

    def test_perimetro_dividido(self):
        script = parse("""
            triangle ABC;
            E = cevian(A, B, C, gergonne);
            assert dist(A, B) + dist(C, E) = dist(A, C) + dist(B, E);
            assert dist(A, B) + dist(C, E) = s;
        """)
        self.assertTrue(evaluate(script, escaleno()).todas_cumplen)

    def test_razon_de_radios_en_7_9_10(self):
        script = parse("""
            triangle ABC;
            constrain ratio(a, b, c) = 7:9:10;
            D = gergonne(A, B, C);
            assert dist(A, D) = 2 * dist(C, D);
        """)
        self.assertTrue(evaluate(script, Triangulo.from_sides(7.0, 9.0, 10.0)).todas_cumplen)

    def test_afirmacion_falsa_no_corta(self):
        script = parse("""
            triangle ABC;
            assert dist(A, B) = dist(A, C);
            M = midpoint(B, C);
            assert on(M, BC);
        """)
        env = evaluate(script, escaleno())
        falsa, verdadera = env.resultados
        self.assertFalse(falsa.cumple)
        self.assertGreater(falsa.residuo, 1e-3)
        self.assertTrue(verdadera.cumple)
        self.assertEqual(env.fallidas(), [falsa])

    def test_paralelas_dan_error_con_posicion(self):
        script = parse('triangle ABC;\nm1 = parallel(A, BC);\nD = intersect(m1, BC);\n')
        with self.assertRaises(EvalError) as ctx:
            evaluate(script, escaleno())
        self.assertEqual(ctx.exception.linea, 3)
        self.assertIsInstance(ctx.exception.causa, ParallelLines)

    def test_restricciones_violadas(self):
        script = parse('triangle ABC; constrain ratio(a, b, c) = 7:9:10;')
        with self.assertRaises(ConstraintViolation):
            evaluate(script, escaleno())
        env = evaluate(script, escaleno(), comprobar_restricciones=False)
        self.assertEqual(env.resultados, [])

    def test_select(self):
        script = parse("""
            triangle ABC;
            X = select(intersect(circumcircle(A, B, C), AB), other(A));
            assert same(X, B);
        """)
        self.assertTrue(evaluate(script, escaleno()).todas_cumplen)

    def test_select_ambiguo(self):
        script = parse('triangle ABC;\nX = select(intersect(circumcircle(A, B, C), AB));')
        with self.assertRaises(EvalError) as ctx:
            evaluate(script, escaleno())
        self.assertIsInstance(ctx.exception.causa, AmbiguousSelection)

    def test_llp_perpendicular(self):
        script = parse("""
            triangle ABC;
            D = gergonne(A, B, C);
            w = select(apollonius(AB, AC, D), smallest);
            E = center(w);
            assert perp(line(D, E), BC);
        """)
        self.assertTrue(evaluate(script, escaleno()).todas_cumplen)

    def test_vertices_con_otro_nombre(self):
        script = parse('triangle XYZ; G = gergonne(X, Y, Z); assert on(G, XY) ;')
        env = evaluate(script, escaleno())
        self.assertEqual(env['X'], escaleno().A)
        self.assertFalse(env.resultados[0].cumple)

    def test_puntos_genericos_deterministas(self):
        script = parse('triangle ABC; P = interior(A, B, C); Q = between(B, C); assert on(Q, BC);')
        uno = evaluate(script, escaleno(), semilla=3)
        otro = evaluate(script, escaleno(), semilla=3)
        distinto = evaluate(script, escaleno(), semilla=4)
        self.assertEqual(uno['P'], otro['P'])
        self.assertNotEqual(uno['P'], distinto['P'])
        self.assertTrue(uno.todas_cumplen)

    def test_puntos_genericos_iguales_entre_precisiones(self):
        script = parse('triangle ABC; P = interior(A, B, C);')
        rapido = evaluate(script, escaleno(), semilla=1)['P']
        T = Triangulo.from_sides(CONFIRM.num(5), CONFIRM.num(6), CONFIRM.num(7))
        exacto = evaluate(script, T, semilla=1)['P']
        self.assertAlmostEqual(float(exacto.x), rapido.x, places=12)
        self.assertAlmostEqual(float(exacto.y), rapido.y, places=12)


class HechosTests(SimpleTestCase):

    def test_pie_y_contacto(self):
        h = hechos(parse("""
            triangle ABC;
            I = incenter(A, B, C);
            D = foot(I, BC);
            E = touch(CA);
        """))
        self.assertTrue(h.colineales('B', 'C', 'D'))
        self.assertTrue(h.colineales('C', 'A', 'E'))
        self.assertFalse(h.colineales('A', 'B', 'D'))
        self.assertTrue(h.perpendiculares_def({frozenset('ID')}, {frozenset('BC')}))

    def test_ceviana_alineada_con_su_centro(self):
        h = hechos(parse("""
            triangle ABC;
            G = gergonne(A, B, C);
            E = cevian(A, B, C, gergonne);
        """))
        self.assertTrue(h.colineales('A', 'E', 'G'))
        self.assertTrue(h.colineales('B', 'C', 'E'))

    def test_paralela_y_tangencias(self):
        h = hechos(parse("""
            triangle ABC;
            M = midpoint(A, B);
            m1 = parallel(M, BC);
            w1 = incircle(A, B, C);
        """))
        self.assertTrue(h.paralelas_def({'m1'}, {frozenset('BC')}))
        self.assertTrue(h.tangentes_def('w1', {frozenset('AB')}))
        self.assertTrue(h.tangentes_def('w1', {frozenset('AM')}))
        self.assertFalse(h.tangentes_def('w1', {'m1'}))

    def test_circunferencia_por_vertices(self):
        h = hechos(parse('triangle ABC; w1 = circumcircle(A, B, C);'))
        self.assertTrue(h.sobre('A', 'w1'))
        self.assertFalse(h.sobre('D', 'w1'))
