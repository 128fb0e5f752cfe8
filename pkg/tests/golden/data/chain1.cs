1 : { 5, 6, 7 }
