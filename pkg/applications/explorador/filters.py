# applications/explorador/filters.py
from django import forms
import django_filters
from django_select2.forms import Select2Widget
from .models import EntradaCatalogo, Exploracion

class EntradaCatalogoFilter(django_filters.FilterSet):
    exploracion = django_filters.ModelChoiceFilter(
        queryset=Exploracion.objects.all(),
        widget=Select2Widget(attrs={'class': 'form-control'}),
        label='Exploración'
    )
    tipo = django_filters.ChoiceFilter(
        choices=EntradaCatalogo.TIPOS,
        widget=Select2Widget(attrs={'class': 'form-control'}),
        label='Tipo de relación'
    )
    afirmacion = django_filters.CharFilter(
        lookup_expr='icontains',
        label='Afirmación',
        widget=forms.TextInput(attrs={'class': 'form-control'})
    )
    trivial = django_filters.BooleanFilter(
        label='Trivial',
        widget=forms.NullBooleanSelect(attrs={'class': 'form-control'})
    )

    class Meta:
        model = EntradaCatalogo
        fields = ['exploracion', 'tipo', 'afirmacion', 'trivial']
