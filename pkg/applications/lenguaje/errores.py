# applications/lenguaje/errores.py

from applications.nucleo.excepciones import GeometriaError


class GeoScriptError(GeometriaError):
    """Error de un script .geo, con la posición (línea, columna) donde ocurrió."""

    def __init__(self, mensaje, linea=None, columna=None):
        self.mensaje = mensaje
        self.linea = linea
        self.columna = columna
        super().__init__(self.__str__())

    def __str__(self):
        if self.linea is None:
            return self.mensaje
        return f'{self.linea}:{self.columna}: {self.mensaje}'


class GeoSyntaxError(GeoScriptError):
    pass


class UnknownFunction(GeoScriptError):
    pass


class ArityError(GeoScriptError):
    pass


class KindError(GeoScriptError):
    """Argumentos de tipo incorrecto, o construcción multivaluada sin select."""


class UseBeforeDef(GeoScriptError):
    pass


class EvalError(GeoScriptError):
    """Error del núcleo al evaluar una sentencia; `causa` es la excepción original."""

    def __init__(self, mensaje, linea=None, columna=None, causa=None):
        self.causa = causa
        super().__init__(mensaje, linea, columna)
