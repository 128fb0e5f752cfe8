2 : { 7 }
